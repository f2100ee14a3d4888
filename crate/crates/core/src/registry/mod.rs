//! Dispatch from parameter tuples to feasibility verdicts and constructions.
//!
//! Entries are tried in tier order (geometry, combinatorial, codes,
//! sporadic, complement), and in registration order within a tier. The
//! first entry whose matcher accepts the parameters wins.

mod catalogue;
mod scan;

use std::fmt;
use std::path::Path;
use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::codes::{bundled_code_database, load_code_database, CodeDatabase, Rejected};
use crate::feasibility::{check_feasibility_with, derive_mu, FeasibilityVerdict, NonexistenceTable, Reason};
use crate::graph::{complement, is_strongly_regular, Graph};
use crate::{Error, Result, SrgParams};

pub use catalogue::ENVELOPE;
pub use scan::{write_scan_csv, ScanRow, ScanSummary, SCAN_LIMIT};

/// Priority classes of constructions, tried in declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tier {
    Geometry,
    Combinatorial,
    Codes,
    Sporadic,
    Complement,
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tier::Geometry => "geometry",
            Tier::Combinatorial => "combinatorial",
            Tier::Codes => "codes",
            Tier::Sporadic => "sporadic",
            Tier::Complement => "complement",
        })
    }
}

type Builder = Arc<dyn Fn() -> Result<Graph> + Send + Sync>;
type Matcher = Arc<dyn Fn(&SrgParams) -> Option<Recipe> + Send + Sync>;

/// A matched construction: a provenance label and a deferred builder.
#[derive(Clone)]
pub struct Recipe {
    label: String,
    build: Builder,
}

impl Recipe {
    pub fn new(label: impl Into<String>, build: impl Fn() -> Result<Graph> + Send + Sync + 'static) -> Self {
        Recipe {
            label: label.into(),
            build: Arc::new(build),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn build(&self) -> Result<Graph> {
        (self.build)()
    }
}

impl fmt::Debug for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Recipe").field("label", &self.label).finish()
    }
}

#[derive(Clone)]
enum Kind {
    Direct(Matcher),
    /// Matches `p` when a direct entry matches the complement of `p`.
    ComplementOf,
}

/// A registered construction.
#[derive(Clone)]
pub struct ConstructionEntry {
    id: String,
    tier: Tier,
    description: String,
    kind: Kind,
}

impl ConstructionEntry {
    /// `matcher` must be a cheap predicate: it may prepare a recipe but
    /// never build a graph.
    pub fn new(
        id: impl Into<String>,
        tier: Tier,
        description: impl Into<String>,
        matcher: impl Fn(&SrgParams) -> Option<Recipe> + Send + Sync + 'static,
    ) -> Self {
        ConstructionEntry {
            id: id.into(),
            tier,
            description: description.into(),
            kind: Kind::Direct(Arc::new(matcher)),
        }
    }

    /// Builds the complement of whatever direct entry realizes the
    /// complementary parameters.
    pub fn complement_wrapper() -> Self {
        ConstructionEntry {
            id: "complement".into(),
            tier: Tier::Complement,
            description: "complement of a graph from any other entry".into(),
            kind: Kind::ComplementOf,
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn tier(&self) -> Tier {
        self.tier
    }

    pub fn description(&self) -> &str {
        &self.description
    }
}

impl fmt::Debug for ConstructionEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ConstructionEntry")
            .field("id", &self.id)
            .field("tier", &self.tier)
            .finish()
    }
}

/// Matched entry id plus its recipe.
#[derive(Debug, Clone)]
pub struct Hit {
    pub entry: String,
    pub recipe: Recipe,
}

impl Hit {
    pub fn provenance(&self, n: u64) -> String {
        format!("{}: Graph on {n} vertices", self.recipe.label)
    }
}

/// Answer of [`Registry::existence`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Existence {
    Exists { entry: String, provenance: String },
    Nonexistent(Reason),
    Unknown,
}

impl Existence {
    /// `True`, `False` or `Unknown`.
    pub fn answer(&self) -> &'static str {
        match self {
            Existence::Exists { .. } => "True",
            Existence::Nonexistent(_) => "False",
            Existence::Unknown => "Unknown",
        }
    }

    /// The CSV status word.
    pub fn status(&self) -> &'static str {
        match self {
            Existence::Exists { .. } => "exists",
            Existence::Nonexistent(_) => "nonexistent",
            Existence::Unknown => "unknown",
        }
    }

    /// Provenance, reason, or empty.
    pub fn detail(&self) -> String {
        match self {
            Existence::Exists { provenance, .. } => provenance.clone(),
            Existence::Nonexistent(r) => r.to_string(),
            Existence::Unknown => String::new(),
        }
    }
}

#[derive(Debug, Clone)]
pub enum LookupStatus {
    /// The graph has passed the oracle with exactly the queried parameters.
    Exists {
        graph: Graph,
        entry: String,
        provenance: String,
    },
    Infeasible(Reason),
    Unknown,
}

#[derive(Debug, Clone)]
pub struct LookupResult {
    pub params: SrgParams,
    pub status: LookupStatus,
    pub elapsed: Duration,
}

/// Completes `(n, k, λ, μ?)`, deriving `μ` from the counting identity when absent.
pub fn complete_params(n: u64, k: u64, lambda: u64, mu: Option<u64>) -> Result<SrgParams> {
    if n < 4 {
        return Err(Error::invalid(format!("need n >= 4, got {n}")));
    }
    let mu = match mu {
        Some(mu) => mu,
        None => derive_mu(n, k, lambda).ok_or_else(|| {
            Error::invalid(format!(
                "k(k - lambda - 1)/(n - k - 1) is not a non-negative integer for n = {n}, k = {k}, lambda = {lambda}"
            ))
        })?,
    };
    Ok(SrgParams { n, k, lambda, mu })
}

/// An immutable set of constructions plus the nonexistence table they are
/// screened against.
#[derive(Clone)]
pub struct Registry {
    entries: Vec<ConstructionEntry>,
    table: NonexistenceTable,
    codes: Arc<CodeDatabase>,
}

impl fmt::Debug for Registry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Registry")
            .field("entries", &self.entries.len())
            .field("table", &self.table.entries().len())
            .field("codes", &self.codes.entries.len())
            .finish()
    }
}

impl Registry {
    /// No constructions, with the given table.
    pub fn empty(table: NonexistenceTable) -> Self {
        Registry {
            entries: Vec::new(),
            table,
            codes: Arc::new(CodeDatabase::default()),
        }
    }

    /// Every bundled construction, the bundled nonexistence table and the
    /// bundled two-weight codes.
    pub fn with_defaults() -> Self {
        Self::build(NonexistenceTable::builtin().clone(), bundled_code_database())
    }

    /// Like [`Registry::with_defaults`], but `dir/nonexistence.txt` replaces the
    /// table and codes in `dir/codes/*.txt` are added to the bundled ones.
    pub fn with_data_dir(dir: Option<&Path>) -> Result<Self> {
        let table = NonexistenceTable::from_data_dir(dir)?;
        let mut codes = bundled_code_database();
        if let Some(codes_dir) = dir.map(|d| d.join("codes")).filter(|d| d.is_dir()) {
            let extra = load_code_database(&codes_dir)?;
            codes.entries.extend(extra.entries);
            codes.rejected.extend(extra.rejected);
        }
        Ok(Self::build(table, codes))
    }

    fn build(table: NonexistenceTable, codes: CodeDatabase) -> Self {
        let codes = Arc::new(codes);
        let mut reg = Registry {
            entries: Vec::new(),
            table,
            codes: codes.clone(),
        };
        for e in catalogue::default_entries(&codes) {
            reg.register(e).expect("default ids are unique");
        }
        reg
    }

    /// Adds `entry` after the existing entries of its tier.
    pub fn register(&mut self, entry: ConstructionEntry) -> Result<()> {
        if self.entries.iter().any(|e| e.id == entry.id) {
            return Err(Error::DuplicateEntry(entry.id));
        }
        let at = self.entries.partition_point(|e| e.tier <= entry.tier);
        self.entries.insert(at, entry);
        Ok(())
    }

    /// Entries in dispatch order.
    pub fn list_constructions(&self) -> &[ConstructionEntry] {
        &self.entries
    }

    pub fn table(&self) -> &NonexistenceTable {
        &self.table
    }

    /// Code files that failed verification and were left out.
    pub fn rejected_codes(&self) -> &[Rejected] {
        &self.codes.rejected
    }

    fn find_direct(&self, p: &SrgParams) -> Option<Hit> {
        self.entries.iter().find_map(|e| match &e.kind {
            Kind::Direct(m) => m(p).map(|recipe| Hit {
                entry: e.id.clone(),
                recipe,
            }),
            Kind::ComplementOf => None,
        })
    }

    /// The first entry that accepts `p`, without building anything.
    pub fn find(&self, p: &SrgParams) -> Option<Hit> {
        if p.n > ENVELOPE {
            return None;
        }
        self.entries.iter().find_map(|e| match &e.kind {
            Kind::Direct(m) => m(p).map(|recipe| Hit {
                entry: e.id.clone(),
                recipe,
            }),
            Kind::ComplementOf => {
                let inner = self.find_direct(&p.complement().ok()?)?;
                let label = format!("complement of {}", inner.recipe.label);
                let build = inner.recipe.build.clone();
                Some(Hit {
                    entry: e.id.clone(),
                    recipe: Recipe::new(label, move || Ok(complement(&build()?))),
                })
            }
        })
    }

    pub fn feasibility(&self, p: &SrgParams) -> FeasibilityVerdict {
        check_feasibility_with(p, &self.table)
    }

    /// Classifies `p` without building a graph.
    pub fn existence_of(&self, p: &SrgParams) -> Existence {
        if let FeasibilityVerdict::Infeasible(reason) = self.feasibility(p) {
            return Existence::Nonexistent(reason);
        }
        match self.find(p) {
            Some(hit) => Existence::Exists {
                provenance: hit.provenance(p.n),
                entry: hit.entry,
            },
            None => Existence::Unknown,
        }
    }

    /// `True`/`False`/`Unknown` for `(n, k, λ, μ?)`.
    pub fn existence(&self, n: u64, k: u64, lambda: u64, mu: Option<u64>) -> Result<Existence> {
        Ok(self.existence_of(&complete_params(n, k, lambda, mu)?))
    }

    /// Screens, builds and oracle-verifies.
    pub fn lookup_params(&self, p: &SrgParams) -> Result<LookupResult> {
        let start = Instant::now();
        let status = match self.feasibility(p) {
            FeasibilityVerdict::Infeasible(reason) => LookupStatus::Infeasible(reason),
            FeasibilityVerdict::Unsettled => match self.find(p) {
                None => LookupStatus::Unknown,
                Some(hit) => {
                    let graph = hit.recipe.build()?;
                    let measured = is_strongly_regular(&graph);
                    if measured != Some(*p) {
                        return Err(Error::OracleMismatch {
                            entry: hit.entry,
                            claimed: *p,
                            measured: measured.map_or("not strongly regular".into(), |m| m.to_string()),
                        });
                    }
                    LookupStatus::Exists {
                        provenance: hit.provenance(p.n),
                        entry: hit.entry,
                        graph,
                    }
                }
            },
        };
        Ok(LookupResult {
            params: *p,
            status,
            elapsed: start.elapsed(),
        })
    }

    pub fn lookup(&self, n: u64, k: u64, lambda: u64, mu: Option<u64>) -> Result<LookupResult> {
        self.lookup_params(&complete_params(n, k, lambda, mu)?)
    }
}

impl Default for Registry {
    fn default() -> Self {
        Self::with_defaults()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::feasibility::Rule;

    fn p(n: u64, k: u64, lambda: u64, mu: u64) -> SrgParams {
        SrgParams { n, k, lambda, mu }
    }

    #[test]
    fn query_examples() {
        let reg = Registry::with_defaults();
        let e = reg.existence(175, 30, 5, Some(5)).unwrap();
        assert_eq!(e.answer(), "True");
        assert!(e.detail().starts_with("AS(5)*; GQ(6, 4): Graph on 175 vertices"));
        assert_eq!(reg.existence(57, 14, 1, None).unwrap().answer(), "False");
        assert_eq!(reg.existence(3250, 57, 0, Some(1)).unwrap().answer(), "Unknown");
        assert_eq!(reg.existence(1024, 462, 206, Some(210)).unwrap().answer(), "Unknown");
        match reg.existence(10, 3, 1, Some(1)).unwrap() {
            Existence::Nonexistent(r) => assert_eq!(r.rule, Rule::Identity),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn mu_derivation() {
        assert_eq!(complete_params(175, 30, 5, None).unwrap(), p(175, 30, 5, 5));
        assert!(complete_params(10, 3, 1, None).is_err());
        assert!(complete_params(3, 1, 0, Some(0)).is_err());
    }

    #[test]
    fn lookup_verifies() {
        let reg = Registry::with_defaults();
        let r = reg.lookup(10, 3, 0, None).unwrap();
        match r.status {
            LookupStatus::Exists { graph, .. } => {
                assert_eq!(is_strongly_regular(&graph), Some(p(10, 3, 0, 1)))
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(reg.lookup(57, 14, 1, Some(4)).unwrap().status, LookupStatus::Infeasible(_)));
    }

    #[test]
    fn registration_rules() {
        let mut reg = Registry::with_defaults();
        assert!(reg.list_constructions().len() >= 15);
        let tiers: Vec<Tier> = reg.list_constructions().iter().map(|e| e.tier()).collect();
        assert!(tiers.windows(2).all(|w| w[0] <= w[1]));
        let dup = ConstructionEntry::new("paley", Tier::Combinatorial, "again", |_| None);
        assert!(matches!(reg.register(dup), Err(Error::DuplicateEntry(_))));
        let extra = ConstructionEntry::new("extra-geometry", Tier::Geometry, "test", |_| None);
        reg.register(extra).unwrap();
        let ids: Vec<&str> = reg.list_constructions().iter().map(|e| e.id()).collect();
        let at = ids.iter().position(|&i| i == "extra-geometry").unwrap();
        assert_eq!(reg.list_constructions()[at + 1].tier(), Tier::Combinatorial);
    }

    #[test]
    fn lying_entry_is_caught() {
        let mut reg = Registry::empty(NonexistenceTable::default());
        reg.register(ConstructionEntry::new("liar", Tier::Sporadic, "claims Petersen", |q| {
            (*q == SrgParams { n: 10, k: 3, lambda: 0, mu: 1 })
                .then(|| Recipe::new("a 10-cycle", || Graph::from_edges(10, (0..10).map(|i| (i, (i + 1) % 10)))))
        }))
        .unwrap();
        assert_eq!(reg.existence(10, 3, 0, Some(1)).unwrap().answer(), "True");
        assert!(matches!(reg.lookup(10, 3, 0, Some(1)), Err(Error::OracleMismatch { .. })));
    }

    #[test]
    fn complement_closure_on_small_params() {
        let reg = Registry::with_defaults();
        for q in [p(10, 6, 3, 4), p(16, 9, 4, 6), p(27, 16, 10, 8), p(50, 42, 35, 36)] {
            let c = q.complement().unwrap();
            assert_eq!(reg.existence_of(&q).answer(), reg.existence_of(&c).answer(), "{q}");
        }
    }
}
