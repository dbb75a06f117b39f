use super::CliError;
use crate::algebra::{parse_algebra_json, AlgebraMap, FinAlgebra};
use crate::exact::{Coefficients, GeneratorKind};
use crate::gca::{FreeGCA, Generator};
use crate::simplicial::{parse_simplicial_text, FinSimplicialSet, SimplicialPair};
use std::path::Path;
use std::sync::Arc;

/// `Z`, `F2`, `F_3`, or a bare prime.
pub fn parse_coefficients(s: &str) -> Result<Coefficients, CliError> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("z") {
        return Ok(Coefficients::Integers);
    }
    let digits = t.trim_start_matches(['F', 'f']).trim_start_matches('_');
    let p: u32 = digits.parse().map_err(|_| CliError::Input(format!("unknown coefficients `{s}`")))?;
    Ok(Coefficients::prime_field(p).map_err(|e| CliError::Input(e.to_string()))?)
}

fn number<T: std::str::FromStr>(s: &str, what: &str) -> Result<T, CliError> {
    s.parse().map_err(|_| CliError::Input(format!("`{s}` is not a valid {what}")))
}

fn prime_field(p: &str) -> Result<Coefficients, CliError> {
    Coefficients::prime_field(number(p, "prime")?).map_err(|e| CliError::Input(e.to_string()))
}

/// An algebra shorthand or a JSON file.
///
/// Shorthands: `fp` (the coefficients themselves), `trunc:p:m` for
/// `F_p[x]/x^m`, `group:Z/q` for `k[Z/q]`, `Zi` for the Gaussian integers,
/// `poly:p:W` for `F_p[x]` truncated above weight `W`.
pub fn parse_algebra(spec: &str, coefficients: Coefficients) -> Result<FinAlgebra, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let algebra = match parts.as_slice() {
        ["fp"] | ["k"] => FinAlgebra::coefficient_ring(coefficients),
        ["Zi"] | ["zi"] => FinAlgebra::gaussian_integers(),
        ["trunc", p, m] => FinAlgebra::truncated_polynomial(prime_field(p)?, number(m, "truncation order")?, 1)?,
        ["group", q] => {
            let q = q.strip_prefix("Z/").unwrap_or(q);
            FinAlgebra::cyclic_group_algebra(coefficients, number(q, "group order")?)?
        }
        ["poly", p, w] => FinAlgebra::polynomial(prime_field(p)?, 1, number(w, "weight bound")?)?,
        _ => {
            let path = Path::new(spec);
            if !path.exists() {
                return Err(CliError::Input(format!("`{spec}` is neither an algebra shorthand nor a file")));
            }
            parse_algebra_json(&read(path)?)?
        }
    };
    Ok(algebra)
}

pub fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Built-in models: `point`, `s1`, `sN`, `torus`, `deltaK`, `boundaryK`.
pub fn parse_model(name: &str) -> Result<FinSimplicialSet, CliError> {
    let n = name.trim().to_ascii_lowercase();
    let set = match n.as_str() {
        "point" | "*" => FinSimplicialSet::point(),
        "circle" => FinSimplicialSet::circle(),
        "torus" => FinSimplicialSet::torus(),
        _ => {
            if let Some(k) = n.strip_prefix("delta") {
                FinSimplicialSet::delta(number(k.trim_start_matches(':'), "simplex dimension")?)?
            } else if let Some(k) = n.strip_prefix("boundary") {
                FinSimplicialSet::boundary_delta(number(k.trim_start_matches(':'), "simplex dimension")?)?
            } else if let Some(k) = n.strip_prefix('s') {
                FinSimplicialSet::sphere_minimal(number(k, "sphere dimension")?)?
            } else {
                return Err(CliError::Input(format!("unknown model `{name}`")));
            }
        }
    };
    Ok(set)
}

/// `X,Y` with built-in models. `Y` may be `point` (just the basepoint),
/// `full`, or `boundary` (the boundary of `X = deltaK`).
pub fn parse_pair(spec: &str) -> Result<SimplicialPair, CliError> {
    let (x, y) = spec.split_once(',').ok_or_else(|| CliError::Input(format!("`{spec}` is not of the form X,Y")))?;
    let x_set = Arc::new(parse_model(x)?);
    match y.trim() {
        "point" | "*" | "base" => Ok(SimplicialPair::absolute(x_set)),
        "full" => Ok(SimplicialPair::full(x_set)),
        y => {
            let sub = if y == "boundary" {
                let k = x.trim().to_ascii_lowercase();
                let k = k.strip_prefix("delta").ok_or_else(|| CliError::Input("`boundary` needs X = deltaK".into()))?;
                FinSimplicialSet::boundary_delta(number(k.trim_start_matches(':'), "simplex dimension")?)?
            } else {
                parse_model(y)?
            };
            let ids = x_set.inclusion_of(&sub)?;
            Ok(SimplicialPair::new(x_set, ids)?)
        }
    }
}

pub fn parse_pair_file(path: &Path) -> Result<SimplicialPair, CliError> {
    Ok(parse_simplicial_text(&read(path)?)?)
}

/// Maps between consecutive algebras, matched by basis labels.
pub fn chain_maps(algebras: &[Arc<FinAlgebra>]) -> Result<Vec<AlgebraMap>, CliError> {
    algebras.windows(2).map(|w| Ok(AlgebraMap::by_labels(w[0].clone(), w[1].clone(), 1)?)).collect()
}

/// A tower base `kind:name:degree[:m]` or a JSON file.
pub fn parse_base(spec: &str, p: u32) -> Result<FreeGCA, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let generator = match parts.as_slice() {
        ["poly", name, d] => Generator::polynomial(*name, number(d, "degree")?),
        ["ext", name, d] => Generator::exterior(*name, number(d, "degree")?),
        ["divpow", name, d] => Generator::divided_power(*name, number(d, "degree")?),
        ["trunc", name, d, m] => Generator::new(*name, GeneratorKind::Truncated(number(m, "order")?), number(d, "degree")?),
        _ => {
            let path = Path::new(spec);
            if !path.exists() {
                return Err(CliError::Input(format!("`{spec}` is neither a generator spec nor a file")));
            }
            return Ok(FreeGCA::from_json(&read(path)?)?);
        }
    };
    Ok(FreeGCA::new(p, vec![generator])?)
}
