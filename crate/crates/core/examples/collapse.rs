//! Degree-based collapse checks on E² pages, plus a page that cannot collapse.

use hochschild::gca::{check_collapse_by_degree, e2_page, BigradedGCA, FreeGCA, Generator, Spectrum};

fn main() {
    for (e, order) in [(Spectrum::Ko, 2), (Spectrum::Tmf, 2), (Spectrum::Ell(3), 1)] {
        let page = BigradedGCA::new(e2_page(e, order, 120).unwrap()).unwrap();
        let report = check_collapse_by_degree(&page, 120);
        println!("{e}, order {order}: collapses = {}", report.collapses);
        for c in report.candidates.iter().take(3) {
            println!("  d^{}: {} {:?} -> {} {:?}", c.r, c.source, c.source_bidegree, c.target, c.target_bidegree);
        }
    }

    // γ_4(x) sits at (4, 20) and z at (1, 22), three filtrations apart
    let page = FreeGCA::new(
        2,
        vec![Generator::divided_power("x", 6).with_filtration(1), Generator::exterior("z", 23).with_filtration(1)],
    )
    .unwrap();
    let report = check_collapse_by_degree(&BigradedGCA::new(page).unwrap(), 40);
    println!("control page: collapses = {}", report.collapses);
    for c in &report.candidates {
        println!("  d^{}: {} -> {}", c.r, c.source, c.target);
    }
}
