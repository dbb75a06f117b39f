//! Line format for custom simplicial sets:
//!
//! ```text
//! # minimal 2-sphere
//! basepoint *
//! * 0
//! σ 2 : s_0 *, s_0 *, s_0 *
//! sub: *
//! ```
//!
//! Each simplex line is `name dim : face_0, ..., face_dim`, each face a
//! degeneracy word followed by a name. `sub:` lists the nondegenerate
//! simplices of the subobject `Y`; without it `Y` is the basepoint.

use super::{FinSimplicialSet, Simplex, SimplicialError, SimplicialPair};
use std::sync::Arc;

fn err(line: usize, message: impl Into<String>) -> SimplicialError {
    SimplicialError::Parse { line, message: message.into() }
}

/// Splits `s_1s_0 x` or `s_{1} s_0 x` into degeneracy indices and a name.
fn parse_word(text: &str, line: usize) -> Result<(Vec<usize>, String), SimplicialError> {
    let mut rest = text.trim();
    let mut word = Vec::new();
    while let Some(tail) = rest.strip_prefix("s_") {
        let tail = tail.trim_start_matches('{');
        let digits: String = tail.chars().take_while(|c| c.is_ascii_digit()).collect();
        if digits.is_empty() {
            return Err(err(line, format!("bad degeneracy in `{text}`")));
        }
        word.push(digits.parse().map_err(|_| err(line, "degeneracy index too large"))?);
        rest = tail[digits.len()..].trim_start_matches('}').trim_start();
    }
    if rest.is_empty() || rest.contains(char::is_whitespace) {
        return Err(err(line, format!("expected a simplex name in `{text}`")));
    }
    Ok((word, rest.to_string()))
}

pub fn parse_simplicial_text(text: &str) -> Result<SimplicialPair, SimplicialError> {
    struct Entry {
        line: usize,
        name: String,
        dim: usize,
        faces: Vec<String>,
    }
    let mut entries: Vec<Entry> = Vec::new();
    let mut basepoint: Option<(usize, String)> = None;
    let mut sub: Option<(usize, Vec<String>)> = None;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("sub:") {
            let names = rest.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
            sub = Some((line, names));
            continue;
        }
        if let Some(rest) = content.strip_prefix("basepoint") {
            if rest.starts_with(char::is_whitespace) {
                basepoint = Some((line, rest.trim().to_string()));
                continue;
            }
        }
        let (head, faces) = match content.split_once(':') {
            Some((h, f)) => (h, f.split(',').map(|s| s.trim().to_string()).collect()),
            None => (content, Vec::new()),
        };
        let mut parts = head.split_whitespace();
        let (Some(name), Some(dim), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(err(line, "expected `name dim : faces`"));
        };
        if name.starts_with("s_") {
            return Err(err(line, "simplex names may not start with `s_`"));
        }
        let dim: usize = dim.parse().map_err(|_| err(line, format!("bad dimension `{dim}`")))?;
        if faces.len() != if dim == 0 { 0 } else { dim + 1 } {
            return Err(err(line, format!("a {dim}-simplex needs {} faces", if dim == 0 { 0 } else { dim + 1 })));
        }
        if entries.iter().any(|e| e.name == name) {
            return Err(err(line, format!("duplicate simplex `{name}`")));
        }
        entries.push(Entry { line, name: name.to_string(), dim, faces });
    }
    if entries.is_empty() {
        return Err(err(0, "no simplices"));
    }
    let find = |name: &str, line: usize| {
        entries
            .iter()
            .position(|e| e.name == name)
            .ok_or_else(|| err(line, format!("unknown simplex `{name}`")))
    };
    let skeleton = FinSimplicialSet {
        names: entries.iter().map(|e| e.name.clone()).collect(),
        dims: entries.iter().map(|e| e.dim).collect(),
        faces: vec![Vec::new(); entries.len()],
        basepoint: 0,
        levels: Default::default(),
    };
    let mut faces = Vec::with_capacity(entries.len());
    for e in &entries {
        let mut fs = Vec::with_capacity(e.faces.len());
        for f in &e.faces {
            let (word, name) = parse_word(f, e.line)?;
            let nd = find(&name, e.line)?;
            let mut s = Simplex::nondegenerate(nd as u32, entries[nd].dim);
            for &j in word.iter().rev() {
                if j > s.level() {
                    return Err(err(e.line, format!("s_{j} out of range in `{f}`")));
                }
                // degeneracies act on the surjection alone
                s = skeleton.degeneracy(&s, j);
            }
            if s.level() + 1 != e.dim {
                return Err(err(e.line, format!("face `{f}` has the wrong dimension")));
            }
            fs.push(s);
        }
        faces.push(fs);
    }
    let bp = match &basepoint {
        Some((line, name)) => find(name, *line)?,
        None => entries.iter().position(|e| e.dim == 0).ok_or_else(|| err(0, "no vertex"))?,
    };
    let line_of_set = entries.last().map(|e| e.line).unwrap_or(0);
    let set = FinSimplicialSet::new(skeleton.names, skeleton.dims, faces, bp).map_err(|e| match e {
        SimplicialError::Parse { .. } => e,
        other => err(line_of_set, other.to_string()),
    })?;
    let set = Arc::new(set);
    match sub {
        None => Ok(SimplicialPair::absolute(set)),
        Some((line, names)) => {
            let ids = names.iter().map(|n| find(n, line).map(|i| i as u32)).collect::<Result<Vec<_>, _>>()?;
            SimplicialPair::new(set, ids).map_err(|e| err(line, e.to_string()))
        }
    }
}

impl FinSimplicialSet {
    /// Writes the text format; `sub` lists the subobject if any.
    pub fn to_text(&self, sub: Option<&[u32]>) -> String {
        let mut out = format!("basepoint {}\n", self.name(self.basepoint));
        for s in 0..self.nondegenerate_count() as u32 {
            out.push_str(&format!("{} {}", self.name(s), self.nd_dim(s)));
            let faces: Vec<String> = self.nd_faces(s).iter().map(|f| self.display(f)).collect();
            if !faces.is_empty() {
                out.push_str(" : ");
                out.push_str(&faces.join(", "));
            }
            out.push('\n');
        }
        if let Some(ids) = sub {
            let names: Vec<&str> = ids.iter().map(|&i| self.name(i)).collect();
            out.push_str(&format!("sub: {}\n", names.join(", ")));
        }
        out
    }
}
