use super::{AlgebraError, FinAlgebra, PointedMonoid};
use crate::exact::Coefficients;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// On-disk form of an algebra. Products not listed are zero, except that
/// products with the unit are implied.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub coefficients: String,
    pub basis: Vec<String>,
    pub unit: String,
    #[serde(default)]
    pub weights: BTreeMap<String, u32>,
    #[serde(default)]
    pub mult: Vec<(String, String, Vec<(i64, String)>)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub augmentation: Option<BTreeMap<String, i64>>,
}

/// On-disk form of a pointed monoid. Products not listed are the basepoint,
/// except that products with the unit are implied. Augmentation values are
/// `"1"` or `"*"`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MonoidFile {
    pub coefficients: String,
    pub elements: Vec<String>,
    pub basepoint: String,
    pub unit: String,
    pub table: Vec<(String, String, String)>,
    #[serde(default)]
    pub weights: BTreeMap<String, u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub augmentation: Option<BTreeMap<String, String>>,
}

fn coefficients(s: &str) -> Result<Coefficients, AlgebraError> {
    s.parse::<Coefficients>().map_err(AlgebraError::from)
}

impl AlgebraFile {
    pub fn build(&self) -> Result<FinAlgebra, AlgebraError> {
        let c = coefficients(&self.coefficients)?;
        let n = self.basis.len();
        let pos = |l: &str| {
            self.basis
                .iter()
                .position(|b| b == l)
                .ok_or_else(|| AlgebraError::UnknownLabel(l.to_string()))
        };
        let unit = pos(&self.unit)?;
        let mut weights = vec![0; n];
        for (l, &w) in &self.weights {
            weights[pos(l)?] = w;
        }
        let mut table: BTreeMap<(usize, usize), Vec<(usize, i64)>> = BTreeMap::new();
        for (a, b, terms) in &self.mult {
            let (i, j) = (pos(a)?, pos(b)?);
            let e = terms.iter().map(|(x, l)| Ok((pos(l)?, *x))).collect::<Result<Vec<_>, AlgebraError>>()?;
            if let Some(prev) = table.insert((i.min(j), i.max(j)), e.clone()) {
                if super::normalize(c, prev) != super::normalize(c, e) {
                    return Err(AlgebraError::NotCommutative(a.clone(), b.clone()));
                }
            }
        }
        let augmentation = match &self.augmentation {
            None => None,
            Some(m) => {
                let mut v = vec![0; n];
                for (l, &x) in m {
                    v[pos(l)?] = x;
                }
                Some(v)
            }
        };
        FinAlgebra::from_table(
            c,
            self.basis.clone(),
            weights,
            unit,
            |i, j| {
                if let Some(e) = table.get(&(i, j)) {
                    e.clone()
                } else if i == unit {
                    vec![(j, 1)]
                } else if j == unit {
                    vec![(i, 1)]
                } else {
                    vec![]
                }
            },
            augmentation,
        )
    }

    pub fn from_algebra(a: &FinAlgebra) -> Self {
        let mut mult = Vec::new();
        for i in 0..a.dim() {
            if i == a.unit() {
                continue;
            }
            for j in i..a.dim() {
                if j == a.unit() || a.mul_basis(i, j).is_empty() {
                    continue;
                }
                let terms = a.mul_basis(i, j).iter().map(|&(k, x)| (x, a.label(k).to_string())).collect();
                mult.push((a.label(i).to_string(), a.label(j).to_string(), terms));
            }
        }
        AlgebraFile {
            coefficients: a.coefficients().to_string(),
            basis: a.labels().to_vec(),
            unit: a.label(a.unit()).to_string(),
            weights: (0..a.dim())
                .filter(|&i| a.weight(i) != 0)
                .map(|i| (a.label(i).to_string(), a.weight(i)))
                .collect(),
            mult,
            augmentation: a
                .augmentation()
                .map(|v| v.iter().enumerate().map(|(i, &x)| (a.label(i).to_string(), x)).collect()),
        }
    }
}

impl MonoidFile {
    pub fn build_monoid(&self) -> Result<(PointedMonoid, Coefficients), AlgebraError> {
        let c = coefficients(&self.coefficients)?;
        let n = self.elements.len();
        let pos = |l: &str| {
            self.elements
                .iter()
                .position(|b| b == l)
                .ok_or_else(|| AlgebraError::UnknownLabel(l.to_string()))
        };
        let (zero, one) = (pos(&self.basepoint)?, pos(&self.unit)?);
        let mut table = vec![vec![zero; n]; n];
        for a in 0..n {
            table[a][one] = a;
            table[one][a] = a;
            table[a][zero] = zero;
            table[zero][a] = zero;
        }
        for (a, b, p) in &self.table {
            let (i, j, k) = (pos(a)?, pos(b)?, pos(p)?);
            table[i][j] = k;
            table[j][i] = k;
        }
        let augmentation = match &self.augmentation {
            None => None,
            Some(m) => {
                let mut v = vec![false; n];
                for (l, x) in m {
                    v[pos(l)?] = match x.as_str() {
                        "1" => true,
                        "*" => false,
                        other => return Err(AlgebraError::Parse(format!("augmentation value `{other}`"))),
                    };
                }
                Some(v)
            }
        };
        let weights = if self.weights.is_empty() {
            None
        } else {
            let mut w = vec![0; n];
            for (l, &x) in &self.weights {
                w[pos(l)?] = x;
            }
            Some(w)
        };
        Ok((PointedMonoid::new(self.elements.clone(), zero, one, table, augmentation, weights)?, c))
    }

    pub fn build(&self) -> Result<FinAlgebra, AlgebraError> {
        let (m, c) = self.build_monoid()?;
        Ok(m.algebra(c))
    }
}

/// Parses either JSON form; a `"table"` key marks a monoid.
pub fn parse_algebra_json(text: &str) -> Result<FinAlgebra, AlgebraError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| AlgebraError::Parse(e.to_string()))?;
    if value.get("table").is_some() {
        let m: MonoidFile = serde_json::from_value(value).map_err(|e| AlgebraError::Parse(e.to_string()))?;
        m.build()
    } else {
        let a: AlgebraFile = serde_json::from_value(value).map_err(|e| AlgebraError::Parse(e.to_string()))?;
        a.build()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_numbers_from_json() {
        let a = parse_algebra_json(
            r#"{"coefficients":"F2","basis":["1","x"],"unit":"1","weights":{"x":1},"mult":[],
                "augmentation":{"1":1,"x":0}}"#,
        )
        .unwrap();
        assert_eq!(a, FinAlgebra::truncated_polynomial(Coefficients::PrimeField(2), 2, 1).unwrap());
    }

    #[test]
    fn gaussian_integers_from_json() {
        let a = parse_algebra_json(
            r#"{"coefficients":"Z","basis":["1","i"],"unit":"1","mult":[["i","i",[[-1,"1"]]]]}"#,
        )
        .unwrap();
        assert_eq!(a, FinAlgebra::gaussian_integers());
    }

    #[test]
    fn round_trip() {
        let a = FinAlgebra::truncated_polynomial(Coefficients::PrimeField(3), 4, 2).unwrap();
        let text = serde_json::to_string(&AlgebraFile::from_algebra(&a)).unwrap();
        assert_eq!(parse_algebra_json(&text).unwrap(), a);
    }

    #[test]
    fn monoid_from_json() {
        let a = parse_algebra_json(
            r#"{"coefficients":"F2","elements":["0","1","g","h"],"basepoint":"0","unit":"1",
                "table":[["g","g","h"],["g","h","1"],["h","h","g"]]}"#,
        )
        .unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.augmentation(), Some(&[1, 1, 1][..]));
    }

    #[test]
    fn bad_label_reported() {
        let r = parse_algebra_json(r#"{"coefficients":"F2","basis":["1"],"unit":"u"}"#);
        assert!(matches!(r, Err(AlgebraError::UnknownLabel(_))));
    }

    #[test]
    fn non_associative_json_rejected() {
        let r = parse_algebra_json(
            r#"{"coefficients":"F2","basis":["1","a","b"],"unit":"1",
                "mult":[["a","a",[[1,"b"]]],["b","b",[[1,"a"]]]]}"#,
        );
        assert!(r.is_err());
    }
}
