//! Two-weight codes: witnesses, graphs, geometric codes and the bundled data.

use std::path::Path;

use super::linear::{code_distance_graph, LinearCode};
use crate::algebra::{FiniteField, ProjectivePoint};
use crate::graph::Graph;
use crate::{Error, Result, SrgParams};

/// The two nonzero weights of a code and how many words carry each.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoWeightWitness {
    pub w1: usize,
    pub w2: usize,
    pub count1: u64,
    pub count2: u64,
}

impl TwoWeightWitness {
    /// Enumerates the code and checks that exactly two nonzero weights occur.
    pub fn of(code: &LinearCode) -> Result<Self> {
        let dist = code.weight_distribution()?;
        let present: Vec<usize> = (1..dist.len()).filter(|&w| dist[w] > 0).collect();
        match present[..] {
            [w1, w2] => Ok(TwoWeightWitness {
                w1,
                w2,
                count1: dist[w1],
                count2: dist[w2],
            }),
            _ => Err(Error::verification(format!("nonzero weights {present:?} are not exactly two"))),
        }
    }

    /// The weight carried by exactly `count` words, if any.
    pub fn weight_with_count(&self, count: u64) -> Option<usize> {
        if self.count1 == count {
            Some(self.w1)
        } else if self.count2 == count {
            Some(self.w2)
        } else {
            None
        }
    }
}

/// Codewords adjacent when their difference has weight `adjacency_weight`,
/// one of the two witnessed weights.
pub fn two_weight_graph(
    code: &LinearCode,
    witness: &TwoWeightWitness,
    adjacency_weight: usize,
) -> Result<Graph> {
    if TwoWeightWitness::of(code)? != *witness {
        return Err(Error::verification("witness does not match the code"));
    }
    if adjacency_weight != witness.w1 && adjacency_weight != witness.w2 {
        return Err(Error::invalid(format!(
            "weight {adjacency_weight} is neither {} nor {}",
            witness.w1, witness.w2
        )));
    }
    code_distance_graph(code, adjacency_weight)
}

/// The code whose generator columns are the coordinate vectors of `points`.
pub fn code_from_point_set(field: &FiniteField, points: &[ProjectivePoint]) -> Result<LinearCode> {
    let Some(first) = points.first() else {
        return Err(Error::invalid("empty point set"));
    };
    let dim = first.coords().len();
    if points.iter().any(|p| p.coords().len() != dim) {
        return Err(Error::invalid("points from different spaces"));
    }
    let generator: Vec<Vec<u32>> = (0..dim)
        .map(|i| points.iter().map(|p| p.coords()[i]).collect())
        .collect();
    LinearCode::new(field.clone(), generator)
        .map_err(|_| Error::invalid("points do not span the ambient space"))
}

/// The `[q + 2, 3]` code of the regular hyperoval in PG(2, q), `q` even.
/// Its nonzero weights are `q` (secant lines) and `q + 2` (external lines).
pub fn hyperoval_code(q: u64) -> Result<LinearCode> {
    let f = FiniteField::of_order(q)?;
    code_from_point_set(&f, &crate::designs::hyperoval(q)?)
}

/// Graph of [`hyperoval_code`] with adjacency weight `q + 2`.
///
/// A point off the hyperoval lies on `q/2` external lines and a point on it
/// on none, so the eigenvalues besides `k = q(q−1)²/2` are `q/2` and
/// `−q(q−1)/2`; `μ = k + rs` and `λ = μ + r + s`.
pub fn hyperoval_code_params(q: u64) -> Option<SrgParams> {
    if q < 4 || !q.is_power_of_two() {
        return None;
    }
    let (n, k) = (q * q * q, q * (q - 1) * (q - 1) / 2);
    let (r, s) = (q as i64 / 2, -((q * (q - 1) / 2) as i64));
    let mu = k as i64 + r * s;
    let lambda = mu + r + s;
    SrgParams::new(n, k, u64::try_from(lambda).ok()?, u64::try_from(mu).ok()?).ok()
}

/// A verified database code with its expected graph parameters.
#[derive(Debug, Clone)]
pub struct CodeEntry {
    pub name: String,
    pub code: LinearCode,
    pub witness: TwoWeightWitness,
    pub params: SrgParams,
    /// The weight whose word count equals `params.k`.
    pub adjacency_weight: usize,
}

impl CodeEntry {
    pub fn graph(&self) -> Result<Graph> {
        two_weight_graph(&self.code, &self.witness, self.adjacency_weight)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rejected {
    pub source: String,
    pub reason: String,
}

/// Admitted entries plus the files that failed verification.
#[derive(Debug, Clone, Default)]
pub struct CodeDatabase {
    pub entries: Vec<CodeEntry>,
    pub rejected: Vec<Rejected>,
}

/// Parses and verifies one code file:
/// a header `q l d w1 w2 n k lambda mu`, then `d` rows of `l` field elements
/// (base-`p` coefficient codes for extension fields). `#` starts a comment.
pub fn parse_code_file(text: &str, name: &str) -> Result<CodeEntry> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line: usize, reason: String| Error::Parse {
        source_name: name.to_string(),
        line,
        reason,
    };
    let ints = |line: usize, s: &str| -> Result<Vec<u64>> {
        s.split_whitespace()
            .map(|t| t.parse::<u64>().map_err(|_| err(line, format!("`{t}` is not an integer"))))
            .collect()
    };
    let (hl, header) = lines.next().ok_or_else(|| err(0, "missing header".into()))?;
    let h = ints(hl, header)?;
    let [q, l, d, w1, w2, n, k, lambda, mu] = h[..] else {
        return Err(err(hl, format!("header needs 9 integers, found {}", h.len())));
    };
    let field = FiniteField::of_order(q)?;
    let mut generator = Vec::new();
    for (ln, row) in lines {
        let r = ints(ln, row)?;
        if r.len() as u64 != l {
            return Err(err(ln, format!("row has {} entries, expected {l}", r.len())));
        }
        if r.iter().any(|&x| x >= q) {
            return Err(err(ln, format!("entry outside GF({q})")));
        }
        generator.push(r.into_iter().map(|x| x as u32).collect::<Vec<_>>());
    }
    if generator.len() as u64 != d {
        return Err(err(hl, format!("expected {d} generator rows, found {}", generator.len())));
    }
    let params = SrgParams::new(n, k, lambda, mu)?;
    let code = LinearCode::new(field, generator)?;
    if code.size() != n {
        return Err(Error::verification(format!("{name}: q^d = {} but n = {n}", code.size())));
    }
    let witness = TwoWeightWitness::of(&code).map_err(|e| Error::verification(format!("{name}: {e}")))?;
    if (witness.w1 as u64, witness.w2 as u64) != (w1, w2) {
        return Err(Error::verification(format!(
            "{name}: weights are ({}, {}), header says ({w1}, {w2})",
            witness.w1, witness.w2
        )));
    }
    let adjacency_weight = witness.weight_with_count(k).ok_or_else(|| {
        Error::verification(format!("{name}: no weight occurs exactly k = {k} times"))
    })?;
    Ok(CodeEntry {
        name: name.to_string(),
        code,
        witness,
        params,
        adjacency_weight,
    })
}

fn admit(sources: impl IntoIterator<Item = (String, Result<String>)>) -> CodeDatabase {
    let mut db = CodeDatabase::default();
    for (name, text) in sources {
        match text.and_then(|t| parse_code_file(&t, &name)) {
            Ok(entry) => db.entries.push(entry),
            Err(e) => db.rejected.push(Rejected {
                source: name,
                reason: e.to_string(),
            }),
        }
    }
    db
}

/// Loads every `*.txt` file in `dir`, in file-name order. Files that fail to
/// parse or verify are listed in `rejected`.
pub fn load_code_database(dir: &Path) -> Result<CodeDatabase> {
    let io = |source| Error::Io {
        path: dir.to_path_buf(),
        source,
    };
    let mut files: Vec<_> = std::fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "txt"))
        .collect();
    files.sort();
    Ok(admit(files.into_iter().map(|p| {
        let name = p.file_name().unwrap().to_string_lossy().into_owned();
        let text = std::fs::read_to_string(&p).map_err(|source| Error::Io { path: p.clone(), source });
        (name, text)
    })))
}

const BUNDLED: &[(&str, &str)] = &[
    ("q2_n256_k170.txt", include_str!("../../data/codes/q2_n256_k170.txt")),
    ("q2_n256_k187.txt", include_str!("../../data/codes/q2_n256_k187.txt")),
    ("q3_n243_k220.txt", include_str!("../../data/codes/q3_n243_k220.txt")),
    ("q3_n729_k476.txt", include_str!("../../data/codes/q3_n729_k476.txt")),
    ("q3_n81_k50.txt", include_str!("../../data/codes/q3_n81_k50.txt")),
    ("q4_n256_k153.txt", include_str!("../../data/codes/q4_n256_k153.txt")),
    ("q5_n625_k364.txt", include_str!("../../data/codes/q5_n625_k364.txt")),
    ("q5_n625_k416.txt", include_str!("../../data/codes/q5_n625_k416.txt")),
];

/// The code files shipped with the crate.
pub fn bundled_code_database() -> CodeDatabase {
    admit(BUNDLED.iter().map(|(n, t)| (n.to_string(), Ok(t.to_string()))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::hyperoval;
    use crate::graph::is_strongly_regular;

    #[test]
    fn hyperoval_code_q4() {
        let f = FiniteField::of_order(4).unwrap();
        let code = code_from_point_set(&f, &hyperoval(4).unwrap()).unwrap();
        assert_eq!((code.length(), code.dimension()), (6, 3));
        let w = TwoWeightWitness::of(&code).unwrap();
        assert_eq!((w.w1, w.w2, w.count1, w.count2), (4, 6, 45, 18));
        let g = two_weight_graph(&code, &w, 4).unwrap();
        assert_eq!(is_strongly_regular(&g), Some(SrgParams { n: 64, k: 45, lambda: 32, mu: 30 }));
        assert!(two_weight_graph(&code, &w, 5).is_err());
    }

    #[test]
    fn hyperoval_codes_match_formula() {
        for q in [4, 8] {
            let code = hyperoval_code(q).unwrap();
            let w = TwoWeightWitness::of(&code).unwrap();
            assert_eq!((w.w1, w.w2), (q as usize, q as usize + 2));
            let g = two_weight_graph(&code, &w, q as usize + 2).unwrap();
            assert_eq!(is_strongly_regular(&g), hyperoval_code_params(q));
        }
        assert_eq!(hyperoval_code_params(4), Some(SrgParams { n: 64, k: 18, lambda: 2, mu: 6 }));
        assert_eq!(hyperoval_code_params(6), None);
    }

    #[test]
    fn non_two_weight_sets() {
        let f = FiniteField::of_order(2).unwrap();
        let pt = |v: Vec<u32>| ProjectivePoint::new(&f, v).unwrap();
        // three points on a line do not span PG(2,2)
        let line = [pt(vec![1, 0, 0]), pt(vec![0, 1, 0]), pt(vec![1, 1, 0])];
        assert!(code_from_point_set(&f, &line).is_err());
        // a frame of four points plus one more: spans, but three weights occur
        let five = [
            pt(vec![1, 0, 0]),
            pt(vec![0, 1, 0]),
            pt(vec![0, 0, 1]),
            pt(vec![1, 1, 1]),
            pt(vec![1, 1, 0]),
        ];
        let c = code_from_point_set(&f, &five).unwrap();
        assert!(TwoWeightWitness::of(&c).is_err());
    }

    #[test]
    fn parse_rejections() {
        assert!(parse_code_file("", "empty").is_err());
        assert!(parse_code_file("3 4 1 1 2 3 1 0 1\n1 1 1 1\n", "bad").is_err());
        let wrong_weights = "# hyperoval code of PG(2,4) with swapped header weights\n\
            4 6 3 6 4 64 45 32 30\n1 1 1 1 0 0\n0 1 2 3 1 0\n0 1 3 2 0 1\n";
        assert!(parse_code_file(wrong_weights, "w").is_err());
    }

    #[test]
    fn empty_directory_gives_empty_database() {
        let dir = tempfile::tempdir().unwrap();
        let db = load_code_database(dir.path()).unwrap();
        assert!(db.entries.is_empty() && db.rejected.is_empty());
        std::fs::write(dir.path().join("broken.txt"), "2 3 1 1 2 2 1 0 1\n1 1\n").unwrap();
        let db = load_code_database(dir.path()).unwrap();
        assert_eq!(db.rejected.len(), 1);
        assert!(load_code_database(&dir.path().join("missing")).is_err());
    }

    #[test]
    fn bundled_entries_all_admitted() {
        let db = bundled_code_database();
        assert!(db.rejected.is_empty(), "{:?}", db.rejected);
        assert_eq!(db.entries.len(), 8);
    }
}
