use super::{rank, smith_normal_form, Coefficients, ExactError, ExactMatrix, PoincareSeries};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// Homology in one degree: a dimension over `F_p`, or free rank plus
/// invariant factors (each > 1, divisibility ordered) over the integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum HomologyEntry {
    Field { dim: u64 },
    Integral { rank: u64, torsion: Vec<u64> },
}

impl HomologyEntry {
    pub fn zero(c: Coefficients) -> Self {
        if c.is_field() {
            HomologyEntry::Field { dim: 0 }
        } else {
            HomologyEntry::Integral {
                rank: 0,
                torsion: Vec::new(),
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            HomologyEntry::Field { dim } => *dim == 0,
            HomologyEntry::Integral { rank, torsion } => *rank == 0 && torsion.is_empty(),
        }
    }

    /// Dimension over a field, or free rank over the integers.
    pub fn rank(&self) -> u64 {
        match self {
            HomologyEntry::Field { dim } => *dim,
            HomologyEntry::Integral { rank, .. } => *rank,
        }
    }

    pub fn torsion(&self) -> &[u64] {
        match self {
            HomologyEntry::Field { .. } => &[],
            HomologyEntry::Integral { torsion, .. } => torsion,
        }
    }

    pub fn direct_sum(&self, other: &HomologyEntry) -> HomologyEntry {
        match (self, other) {
            (HomologyEntry::Field { dim: a }, HomologyEntry::Field { dim: b }) => {
                HomologyEntry::Field { dim: a + b }
            }
            (
                HomologyEntry::Integral { rank: r1, torsion: t1 },
                HomologyEntry::Integral { rank: r2, torsion: t2 },
            ) => {
                let mut all = t1.clone();
                all.extend_from_slice(t2);
                HomologyEntry::Integral {
                    rank: r1 + r2,
                    torsion: merge_torsion(&all),
                }
            }
            _ => panic!("direct sum of homology over different coefficient rings"),
        }
    }
}

impl fmt::Display for HomologyEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomologyEntry::Field { dim } => write!(f, "{dim}"),
            HomologyEntry::Integral { rank, torsion } => {
                let mut parts = Vec::new();
                if *rank > 0 {
                    parts.push(if *rank == 1 { "Z".to_string() } else { format!("Z^{rank}") });
                }
                let mut i = 0;
                while i < torsion.len() {
                    let d = torsion[i];
                    let n = torsion[i..].iter().take_while(|&&x| x == d).count();
                    parts.push(if n == 1 { format!("Z/{d}") } else { format!("(Z/{d})^{n}") });
                    i += n;
                }
                if parts.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", parts.join(" + "))
                }
            }
        }
    }
}

fn prime_powers(mut n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut q = 1;
            while n % d == 0 {
                n /= d;
                q *= d;
            }
            out.push((d, q));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, n));
    }
    out
}

/// Invariant factors of a direct sum of cyclic groups `Z/d_i`.
pub fn merge_torsion(orders: &[u64]) -> Vec<u64> {
    let mut by_prime: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for &d in orders.iter().filter(|&&d| d > 1) {
        for (p, q) in prime_powers(d) {
            by_prime.entry(p).or_default().push(q);
        }
    }
    let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
    let mut factors = vec![1u64; len];
    for powers in by_prime.values_mut() {
        powers.sort_unstable_by(|a, b| b.cmp(a));
        // largest powers go to the last factors
        for (k, q) in powers.iter().enumerate() {
            factors[len - 1 - k] *= q;
        }
    }
    factors
}

/// Homology at the middle of `C_{k+1} --d_in--> C_k --d_out--> C_{k-1}`.
pub fn homology_at(d_in: &ExactMatrix, d_out: &ExactMatrix) -> Result<HomologyEntry, ExactError> {
    d_in.coefficients().ensure_same(d_out.coefficients())?;
    if d_in.rows() != d_out.cols() {
        return Err(ExactError::DimensionMismatch(format!(
            "d_in lands in dimension {}, d_out starts in dimension {}",
            d_in.rows(),
            d_out.cols()
        )));
    }
    if !d_out.mul(d_in)?.is_zero() {
        return Err(ExactError::CompositionNonzero);
    }
    homology_unchecked(d_in, d_out)
}

/// As [`homology_at`] without verifying `d_out * d_in = 0`.
pub(crate) fn homology_unchecked(d_in: &ExactMatrix, d_out: &ExactMatrix) -> Result<HomologyEntry, ExactError> {
    let n = d_in.rows() as u64;
    match d_in.coefficients() {
        Coefficients::PrimeField(_) => {
            let r_out = if d_out.is_zero() { 0 } else { rank(d_out)? } as u64;
            let r_in = if d_in.is_zero() { 0 } else { rank(d_in)? } as u64;
            Ok(HomologyEntry::Field { dim: n - r_out - r_in })
        }
        Coefficients::Integers => {
            let r_out = if d_out.is_zero() { 0 } else { smith_normal_form(d_out)?.rank } as u64;
            let s_in = smith_normal_form(d_in)?;
            Ok(HomologyEntry::Integral {
                rank: n - r_out - s_in.rank as u64,
                torsion: s_in.torsion(),
            })
        }
    }
}

/// Homology in degrees `0..=max_degree`, optionally split by internal weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyTable {
    pub coefficients: Coefficients,
    pub degrees: Vec<HomologyEntry>,
    /// Per `(degree, weight)` contributions, when the computation was graded.
    pub cells: BTreeMap<(usize, u32), HomologyEntry>,
}

impl HomologyTable {
    pub fn new(coefficients: Coefficients, max_degree: usize) -> Self {
        HomologyTable {
            coefficients,
            degrees: vec![HomologyEntry::zero(coefficients); max_degree + 1],
            cells: BTreeMap::new(),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.len().saturating_sub(1)
    }

    /// Adds a graded piece into degree `k`.
    pub fn add_cell(&mut self, k: usize, weight: u32, entry: HomologyEntry) {
        self.degrees[k] = self.degrees[k].direct_sum(&entry);
        let cell = self
            .cells
            .entry((k, weight))
            .or_insert_with(|| HomologyEntry::zero(self.coefficients));
        *cell = cell.direct_sum(&entry);
    }

    /// Dimensions per degree (over `F_p`) or free ranks (over the integers).
    pub fn ranks(&self) -> Vec<u64> {
        self.degrees.iter().map(HomologyEntry::rank).collect()
    }

    pub fn series(&self) -> PoincareSeries {
        PoincareSeries::from_coefficients(self.ranks())
    }

    /// The same table with per-weight cells forgotten.
    pub fn ungraded(&self) -> HomologyTable {
        HomologyTable {
            coefficients: self.coefficients,
            degrees: self.degrees.clone(),
            cells: BTreeMap::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("homology tables always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

impl fmt::Display for HomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:>4}  {}", "k", format!("H_k ({})", self.coefficients))?;
        for (k, e) in self.degrees.iter().enumerate() {
            writeln!(f, "{k:>4}  {e}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct DegreeJson {
    k: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    dim: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    rank: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    torsion: Option<Vec<u64>>,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    coefficients: Option<String>,
    degrees: Vec<DegreeJson>,
}

impl Serialize for HomologyTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let degrees = self
            .degrees
            .iter()
            .enumerate()
            .map(|(k, e)| match e {
                HomologyEntry::Field { dim } => DegreeJson {
                    k,
                    dim: Some(*dim),
                    rank: None,
                    torsion: None,
                },
                HomologyEntry::Integral { rank, torsion } => DegreeJson {
                    k,
                    dim: None,
                    rank: Some(*rank),
                    torsion: Some(torsion.clone()),
                },
            })
            .collect();
        TableJson {
            coefficients: Some(self.coefficients.to_string()),
            degrees,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HomologyTable {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = TableJson::deserialize(d)?;
        let mut degrees = vec![None; raw.degrees.len()];
        let mut integral = None;
        for e in raw.degrees {
            let entry = match (e.dim, e.rank) {
                (Some(dim), None) => HomologyEntry::Field { dim },
                (None, Some(rank)) => HomologyEntry::Integral {
                    rank,
                    torsion: merge_torsion(&e.torsion.unwrap_or_default()),
                },
                _ => return Err(D::Error::custom("each degree needs exactly one of `dim` or `rank`")),
            };
            let is_int = matches!(entry, HomologyEntry::Integral { .. });
            if *integral.get_or_insert(is_int) != is_int {
                return Err(D::Error::custom("mixed field and integral entries"));
            }
            let slot = degrees
                .get_mut(e.k)
                .ok_or_else(|| D::Error::custom(format!("degree {} out of range", e.k)))?;
            *slot = Some(entry);
        }
        let degrees: Vec<HomologyEntry> = degrees
            .into_iter()
            .enumerate()
            .map(|(k, e)| e.ok_or_else(|| D::Error::custom(format!("missing degree {k}"))))
            .collect::<Result<_, _>>()?;
        let coefficients = match raw.coefficients {
            Some(c) => c.parse::<Coefficients>().map_err(D::Error::custom)?,
            None if integral == Some(true) => Coefficients::Integers,
            None => Coefficients::PrimeField(2),
        };
        if coefficients.is_field() == (integral == Some(true)) {
            return Err(D::Error::custom("entries do not match the coefficient ring"));
        }
        Ok(HomologyTable {
            coefficients,
            degrees,
            cells: BTreeMap::new(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: Coefficients = Coefficients::Integers;

    #[test]
    fn multiplication_by_two_gives_z_mod_2() {
        let d_in = ExactMatrix::from_dense(Z, &[vec![2]]).unwrap();
        let d_out = ExactMatrix::zero(Z, 0, 1);
        let h = homology_at(&d_in, &d_out).unwrap();
        assert_eq!(h, HomologyEntry::Integral { rank: 0, torsion: vec![2] });
    }

    #[test]
    fn zero_differentials_give_chain_groups() {
        let f3 = Coefficients::PrimeField(3);
        let h = homology_at(&ExactMatrix::zero(f3, 4, 2), &ExactMatrix::zero(f3, 5, 4)).unwrap();
        assert_eq!(h, HomologyEntry::Field { dim: 4 });
    }

    #[test]
    fn exact_pair_is_zero() {
        // Z --(1,1)--> Z^2 --(1,-1)--> Z
        let d_in = ExactMatrix::from_dense(Z, &[vec![1], vec![1]]).unwrap();
        let d_out = ExactMatrix::from_dense(Z, &[vec![1, -1]]).unwrap();
        assert!(homology_at(&d_in, &d_out).unwrap().is_zero());
    }

    #[test]
    fn nonzero_composite_rejected() {
        let d = ExactMatrix::identity(Z, 1);
        assert_eq!(homology_at(&d, &d), Err(ExactError::CompositionNonzero));
    }

    #[test]
    fn torsion_merging() {
        assert_eq!(merge_torsion(&[2, 3]), vec![6]);
        assert_eq!(merge_torsion(&[2, 2]), vec![2, 2]);
        assert_eq!(merge_torsion(&[4, 6, 1]), vec![2, 12]);
    }

    #[test]
    fn display_of_integral_entries() {
        let e = HomologyEntry::Integral { rank: 2, torsion: vec![2, 2] };
        assert_eq!(e.to_string(), "Z^2 + (Z/2)^2");
    }

    #[test]
    fn json_schema_round_trip() {
        let mut t = HomologyTable::new(Z, 1);
        t.add_cell(0, 0, HomologyEntry::Integral { rank: 2, torsion: vec![] });
        t.add_cell(1, 0, HomologyEntry::Integral { rank: 0, torsion: vec![2, 2] });
        let js = t.to_json();
        assert!(js.contains("\"torsion\""));
        assert_eq!(HomologyTable::from_json(&js).unwrap(), t.ungraded());
        let v: serde_json::Value = serde_json::from_str(&js).unwrap();
        assert_eq!(v["degrees"][1]["k"], 1);
    }
}
