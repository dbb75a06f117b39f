use super::{FreeGCA, GcaError, Generator};
use crate::exact::GeneratorKind;
use std::collections::BTreeMap;

/// Name of the `p^i`-th divided power of `name`.
pub(crate) fn gamma_name(name: &str, p: u32, i: u32) -> String {
    if i == 0 {
        name.to_string()
    } else {
        format!("γ{}({name})", (p as u64).pow(i))
    }
}

/// Splits a divided-power generator into truncated pieces `γ_{p^i}` of
/// order `p`, keeping those of degree at most `bound`.
fn expand_divided_power(g: &Generator, p: u32, bound: usize) -> Result<Vec<Generator>, GcaError> {
    if g.degree == 0 {
        return Err(GcaError::UnboundedDegreeZero(g.name.clone()));
    }
    let mut out = Vec::new();
    let mut i = 0u32;
    let mut pow = 1usize;
    while let Some(d) = pow.checked_mul(g.degree).filter(|&d| d <= bound) {
        out.push(Generator::truncated(gamma_name(&g.name, p, i), d, p as u64));
        i += 1;
        pow = match pow.checked_mul(p as usize) {
            Some(x) => x,
            None => break,
        };
    }
    Ok(out)
}

/// `Tor^A(F_p, F_p)` through degree `bound`, as a free algebra again.
///
/// Each output generator carries the filtration degree it has in the bar
/// spectral sequence for this step: 1 for suspensions, 2 for the
/// transpotence class of a truncated generator.
pub fn tor_step(a: &FreeGCA, bound: usize) -> Result<FreeGCA, GcaError> {
    let p = a.prime();
    let mut out = Vec::new();
    let mut push = |g: Generator| {
        if g.degree <= bound {
            out.push(g);
        }
    };
    for g in a.generators() {
        let pieces = match g.kind {
            GeneratorKind::DividedPower => expand_divided_power(g, p, bound)?,
            _ => vec![g.clone()],
        };
        for x in pieces {
            match x.kind {
                GeneratorKind::Polynomial => push(Generator::exterior(format!("ε{}", x.name), x.degree + 1).with_filtration(1)),
                GeneratorKind::Exterior => {
                    push(Generator::divided_power(format!("ρ⁰{}", x.name), x.degree + 1).with_filtration(1))
                }
                GeneratorKind::Truncated(m) => {
                    push(Generator::exterior(format!("ε{}", x.name), x.degree + 1).with_filtration(1));
                    push(Generator::divided_power(format!("φ⁰{}", x.name), m as usize * x.degree + 2).with_filtration(2));
                }
                GeneratorKind::DividedPower => unreachable!("divided powers were expanded"),
            }
        }
    }
    FreeGCA::new(p, out)
}

/// How a generator of `A` acts on the coefficient algebra `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Action {
    /// Through the augmentation.
    Trivial,
    /// As `target^exponent`, for a polynomial generator `target` of `M`.
    Power { target: String, exponent: u64 },
}

/// `Tor^A(M, F_p)` for `M` free over `F_p`, with `A` acting as described.
///
/// A polynomial generator `u` acting by `v^r` truncates `v` to
/// `F_p[v]/v^r`; trivially acting generators contribute their own
/// `tor_step`. Generators missing from `actions` act trivially.
pub fn tor_with_coefficients(
    a: &FreeGCA,
    m: &FreeGCA,
    actions: &BTreeMap<String, Action>,
    bound: usize,
) -> Result<FreeGCA, GcaError> {
    if a.prime() != m.prime() {
        return Err(GcaError::UnsupportedAction(format!("primes {} and {} differ", a.prime(), m.prime())));
    }
    for name in actions.keys() {
        if !a.generators().iter().any(|g| &g.name == name) {
            return Err(GcaError::UnsupportedAction(format!("`{name}` is not a generator of A")));
        }
    }
    let mut truncations: BTreeMap<&str, u64> = BTreeMap::new();
    let mut trivial = Vec::new();
    for g in a.generators() {
        match actions.get(&g.name).unwrap_or(&Action::Trivial) {
            Action::Trivial => trivial.push(g.clone()),
            Action::Power { target, exponent } => {
                let v = m
                    .generators()
                    .iter()
                    .find(|v| &v.name == target)
                    .ok_or_else(|| GcaError::UnsupportedAction(format!("`{target}` is not a generator of M")))?;
                if g.kind != GeneratorKind::Polynomial || v.kind != GeneratorKind::Polynomial {
                    return Err(GcaError::UnsupportedAction(format!(
                        "`{}` ↦ `{target}`^{exponent} needs polynomial generators on both sides",
                        g.name
                    )));
                }
                if *exponent == 0 || v.degree * *exponent as usize != g.degree {
                    return Err(GcaError::UnsupportedAction(format!(
                        "`{}` has degree {} but `{target}`^{exponent} has degree {}",
                        g.name,
                        g.degree,
                        v.degree * *exponent as usize
                    )));
                }
                if truncations.insert(target.as_str(), *exponent).is_some() {
                    return Err(GcaError::UnsupportedAction(format!("`{target}` is hit by two generators")));
                }
            }
        }
    }
    let mut out = Vec::new();
    for v in m.generators() {
        match truncations.get(v.name.as_str()) {
            None => out.push(v.clone()),
            Some(1) => {}
            Some(&r) => out.push(Generator::truncated(v.name.clone(), v.degree, r).with_filtration(0)),
        }
    }
    let rest = tor_step(&FreeGCA::new(a.prime(), trivial)?, bound)?;
    out.extend(rest.generators().iter().cloned());
    FreeGCA::new(a.prime(), out)
}

/// `B′_n`: the additive model of `HH^{[n]}(F_p[x]) ≅ F_p[x] ⊗ B′_n`, with
/// `B′_1 = F_p[x]`, `|x| = 0`.
pub fn b_prime(p: u32, n: usize, bound: usize) -> Result<FreeGCA, GcaError> {
    if n == 0 {
        return Err(GcaError::InvalidParameter("towers start at n = 1".into()));
    }
    let mut b = FreeGCA::new(p, vec![Generator::polynomial("x", 0)])?;
    for _ in 1..n {
        b = tor_step(&b, bound)?;
    }
    Ok(b)
}

/// `B″_n(m)`: the additive model of `HH^{[n]}(F_p[x]/x^m)` divided by the
/// base `F_p[x]/x^m`. Needs `p | m`.
pub fn b_double_prime(p: u32, n: usize, m: u64, bound: usize) -> Result<FreeGCA, GcaError> {
    if n == 0 {
        return Err(GcaError::InvalidParameter("towers start at n = 1".into()));
    }
    if m < 2 || m % p as u64 != 0 {
        return Err(GcaError::PNotDividingM { p, m });
    }
    let mut b = tor_step(&FreeGCA::new(p, vec![Generator::truncated("x", 0, m)])?, bound)?;
    for _ in 1..n {
        b = tor_step(&b, bound)?;
    }
    Ok(b)
}
