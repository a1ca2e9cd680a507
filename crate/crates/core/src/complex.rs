//! Vietoris-Rips complexes and filtrations over dissimilarity graphs.
//!
//! A simplex enters the filtration at the largest dissimilarity among its
//! vertex pairs. Vertex pairs without a recorded dissimilarity never become
//! edges, so the graph may be sparse.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::io::{BufRead, Write};
use std::ops::ControlFlow;

use crate::algebra::{Simplex, Vertex};
use crate::error::{Error, Result};

/// Symmetric sparse dissimilarities in `[0, 1]`, one entry per unordered pair.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct DissimilarityGraph {
    n: usize,
    edges: BTreeMap<(Vertex, Vertex), f64>,
}

impl DissimilarityGraph {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            edges: BTreeMap::new(),
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex, f64)>,
    {
        let mut g = Self::new(n);
        for (a, b, d) in edges {
            g.insert(a, b, d)?;
        }
        Ok(g)
    }

    /// Sets the dissimilarity of `{a, b}`, replacing any previous value.
    pub fn insert(&mut self, a: Vertex, b: Vertex, d: f64) -> Result<Option<f64>> {
        if a == b {
            return Err(Error::InvalidParameter(format!("self-loop on vertex {a}")));
        }
        if a as usize >= self.n || b as usize >= self.n {
            return Err(Error::InvalidParameter(format!(
                "edge ({a}, {b}) out of range for {} vertices",
                self.n
            )));
        }
        if !(0.0..=1.0).contains(&d) {
            return Err(Error::InvalidParameter(format!(
                "dissimilarity {d} outside [0, 1]"
            )));
        }
        Ok(self.edges.insert((a.min(b), a.max(b)), d))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn get(&self, a: Vertex, b: Vertex) -> Option<f64> {
        self.edges.get(&(a.min(b), a.max(b))).copied()
    }

    /// Edges as `(i, j, d)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, f64)> + '_ {
        self.edges.iter().map(|(&(a, b), &d)| (a, b, d))
    }

    /// Sorted distinct edge dissimilarities: the scales at which the
    /// Vietoris-Rips complex changes.
    pub fn event_points(&self) -> Vec<f64> {
        let mut ds: Vec<f64> = self.edges.values().copied().collect();
        ds.sort_by(f64::total_cmp);
        ds.dedup();
        ds
    }

    /// Per-vertex birth under the given mode. Isolated vertices are born at 0.
    pub fn vertex_births(&self, mode: VertexBirth) -> Vec<f64> {
        match mode {
            VertexBirth::Zero => vec![0.0; self.n],
            VertexBirth::FirstEdge => {
                let mut births = vec![f64::INFINITY; self.n];
                for (a, b, d) in self.edges() {
                    births[a as usize] = births[a as usize].min(d);
                    births[b as usize] = births[b as usize].min(d);
                }
                for b in &mut births {
                    if b.is_infinite() {
                        *b = 0.0;
                    }
                }
                births
            }
        }
    }

    /// Higher-numbered neighbors of each vertex with `d <= max_eps`, sorted by id.
    fn upper_adjacency(&self, max_eps: f64) -> Vec<Vec<(Vertex, f64)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (a, b, d) in self.edges() {
            if d <= max_eps {
                adj[a as usize].push((b, d));
            }
        }
        adj
    }
}

/// When vertices enter a filtration.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum VertexBirth {
    /// Every vertex is present from scale 0.
    #[default]
    Zero,
    /// A vertex appears with its cheapest incident edge.
    FirstEdge,
}

impl std::str::FromStr for VertexBirth {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zero" => Ok(Self::Zero),
            "first-edge" => Ok(Self::FirstEdge),
            other => Err(Error::InvalidParameter(format!(
                "unknown vertex birth mode `{other}` (expected zero or first-edge)"
            ))),
        }
    }
}

impl std::fmt::Display for VertexBirth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Zero => "zero",
            Self::FirstEdge => "first-edge",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FiltrationEntry {
    pub simplex: Simplex,
    pub birth: f64,
}

/// Total order of a filtration: birth, then dimension, then vertices.
pub fn filtration_order(a: &FiltrationEntry, b: &FiltrationEntry) -> Ordering {
    a.birth
        .total_cmp(&b.birth)
        .then_with(|| a.simplex.dim().cmp(&b.simplex.dim()))
        .then_with(|| a.simplex.cmp(&b.simplex))
}

/// Simplices tagged with birth scales, sorted by [`filtration_order`].
#[derive(Clone, Debug, PartialEq)]
pub struct Filtration {
    entries: Vec<FiltrationEntry>,
    max_dim: usize,
    max_eps: f64,
}

impl Filtration {
    /// Builds a filtration from arbitrary simplices with births, checking
    /// that every face is present and born no later than its cofaces.
    pub fn from_entries(mut entries: Vec<FiltrationEntry>) -> Result<Self> {
        entries.sort_by(filtration_order);
        if let Some(w) = entries.windows(2).find(|w| w[0].simplex == w[1].simplex) {
            return Err(Error::InvalidParameter(format!(
                "simplex {} listed twice",
                w[0].simplex
            )));
        }
        let births: BTreeMap<&Simplex, f64> = entries.iter().map(|e| (&e.simplex, e.birth)).collect();
        let violations = validate_complex(births.keys().copied());
        if let Some(first) = violations.first() {
            return Err(Error::NotClosed(violations.len(), first.to_string()));
        }
        for e in &entries {
            for (face, _) in e.simplex.faces() {
                if births[&face] > e.birth {
                    return Err(Error::InvalidParameter(format!(
                        "face {face} born after coface {}",
                        e.simplex
                    )));
                }
            }
        }
        let max_dim = entries.iter().map(|e| e.simplex.dim()).max().unwrap_or(0);
        let max_eps = entries.iter().map(|e| e.birth).fold(0.0, f64::max);
        Ok(Self {
            entries,
            max_dim,
            max_eps,
        })
    }

    /// A filtration of a fixed complex where everything is born at 0.
    pub fn from_complex<I>(simplices: I) -> Result<Self>
    where
        I: IntoIterator<Item = Simplex>,
    {
        Self::from_entries(
            simplices
                .into_iter()
                .map(|simplex| FiltrationEntry { simplex, birth: 0.0 })
                .collect(),
        )
    }

    pub fn entries(&self) -> &[FiltrationEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn max_eps(&self) -> f64 {
        self.max_eps
    }

    /// The sorted prefix of simplices with `birth <= eps`.
    pub fn prefix_at(&self, eps: f64) -> &[FiltrationEntry] {
        let end = self.entries.partition_point(|e| e.birth <= eps);
        &self.entries[..end]
    }

    /// The complex `V_eps`: every simplex born at or before `eps`.
    pub fn complex_at(&self, eps: f64) -> BTreeSet<Simplex> {
        self.prefix_at(eps).iter().map(|e| e.simplex.clone()).collect()
    }

    /// Distinct birth values in increasing order.
    pub fn event_points(&self) -> Vec<f64> {
        let mut ps: Vec<f64> = self.entries.iter().map(|e| e.birth).collect();
        ps.dedup();
        ps
    }

    /// Writes `birth <TAB> v0,v1,...` per simplex in stored order.
    pub fn write_tsv<W: Write>(&self, mut w: W) -> Result<()> {
        for e in &self.entries {
            write!(w, "{}\t", e.birth)?;
            write_vertex_list(&mut w, e.simplex.vertices())?;
            writeln!(w)?;
        }
        Ok(())
    }

    /// Reads the format produced by [`Filtration::write_tsv`]. Blank lines and
    /// `#` comments are skipped; rows may come in any order.
    pub fn read_tsv<R: BufRead>(r: R) -> Result<Self> {
        let mut entries = Vec::new();
        for (i, line) in r.lines().enumerate() {
            let line = line?;
            let lineno = i + 1;
            let line = line.trim_end_matches('\r');
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split('\t');
            let (Some(birth), Some(verts), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(Error::parse(lineno, "expected `birth<TAB>v0,v1,...`"));
            };
            let birth: f64 = birth
                .trim()
                .parse()
                .map_err(|_| Error::parse(lineno, format!("bad birth `{birth}`")))?;
            if !birth.is_finite() || birth < 0.0 {
                return Err(Error::parse(
                    lineno,
                    format!("birth {birth} must be finite and >= 0"),
                ));
            }
            let vertices = parse_vertex_list(verts).map_err(|m| Error::parse(lineno, m))?;
            let (simplex, _) =
                Simplex::canonicalize(&vertices).map_err(|e| Error::parse(lineno, e.to_string()))?;
            entries.push(FiltrationEntry { simplex, birth });
        }
        Self::from_entries(entries)
    }
}

pub(crate) fn write_vertex_list<W: Write + ?Sized>(w: &mut W, vertices: &[Vertex]) -> std::io::Result<()> {
    for (i, v) in vertices.iter().enumerate() {
        if i > 0 {
            write!(w, ",")?;
        }
        write!(w, "{v}")?;
    }
    Ok(())
}

pub(crate) fn parse_vertex_list(s: &str) -> std::result::Result<Vec<Vertex>, String> {
    s.split(',')
        .map(|v| {
            v.trim()
                .parse::<Vertex>()
                .map_err(|_| format!("bad vertex id `{v}`"))
        })
        .collect()
}

/// Options for [`build_vr_filtration`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VrOptions {
    /// Largest simplex dimension to build.
    pub max_dim: usize,
    /// Largest birth scale kept.
    pub max_eps: f64,
    pub vertex_birth: VertexBirth,
}

impl Default for VrOptions {
    fn default() -> Self {
        Self {
            max_dim: 3,
            max_eps: 1.0,
            vertex_birth: VertexBirth::Zero,
        }
    }
}

/// Builds the Vietoris-Rips filtration of `g` up to `opts.max_dim` and
/// `opts.max_eps`.
pub fn build_vr_filtration(g: &DissimilarityGraph, opts: &VrOptions) -> Filtration {
    let mut entries = Vec::new();
    let _: ControlFlow<()> = for_each_vr_simplex(g, opts, |vertices, birth| {
        entries.push(FiltrationEntry {
            simplex: Simplex::from_sorted_unchecked(vertices.to_vec()),
            birth,
        });
        ControlFlow::Continue(())
    });
    entries.sort_by(filtration_order);
    Filtration {
        entries,
        max_dim: opts.max_dim,
        max_eps: opts.max_eps,
    }
}

/// Counts the simplices [`build_vr_filtration`] would produce, failing as
/// soon as the count passes `budget`.
pub fn count_vr_simplices(g: &DissimilarityGraph, opts: &VrOptions, budget: usize) -> Result<usize> {
    let mut count = 0usize;
    let flow = for_each_vr_simplex(g, opts, |_, _| {
        count += 1;
        if count > budget {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    match flow {
        ControlFlow::Break(()) => Err(Error::SimplexBudget { budget }),
        ControlFlow::Continue(()) => Ok(count),
    }
}

/// Enumerates every Vietoris-Rips simplex by ordered neighbor intersection.
/// Each simplex is reported once with its sorted vertices and birth.
fn for_each_vr_simplex<B, F>(g: &DissimilarityGraph, opts: &VrOptions, mut visit: F) -> ControlFlow<B>
where
    F: FnMut(&[Vertex], f64) -> ControlFlow<B>,
{
    let births = g.vertex_births(opts.vertex_birth);
    let adj = g.upper_adjacency(opts.max_eps);
    let mut stack = Vec::with_capacity(opts.max_dim + 1);
    for v in 0..g.vertex_count() {
        let birth = births[v];
        if birth > opts.max_eps {
            continue;
        }
        stack.clear();
        stack.push(v as Vertex);
        visit(&stack, birth)?;
        if opts.max_dim == 0 {
            continue;
        }
        let candidates: Vec<(Vertex, f64)> = adj[v].clone();
        expand(&adj, opts.max_dim, &mut stack, birth, &candidates, &mut visit)?;
    }
    ControlFlow::Continue(())
}

/// `candidates` are the common upper neighbors of `stack`, each paired with
/// its largest dissimilarity to any vertex of `stack`.
fn expand<B, F>(
    adj: &[Vec<(Vertex, f64)>],
    max_dim: usize,
    stack: &mut Vec<Vertex>,
    birth: f64,
    candidates: &[(Vertex, f64)],
    visit: &mut F,
) -> ControlFlow<B>
where
    F: FnMut(&[Vertex], f64) -> ControlFlow<B>,
{
    for (i, &(w, dw)) in candidates.iter().enumerate() {
        let child_birth = birth.max(dw);
        stack.push(w);
        visit(stack, child_birth)?;
        if stack.len() <= max_dim {
            let next = intersect(&candidates[i + 1..], &adj[w as usize]);
            if !next.is_empty() {
                expand(adj, max_dim, stack, child_birth, &next, visit)?;
            }
        }
        stack.pop();
    }
    ControlFlow::Continue(())
}

fn intersect(candidates: &[(Vertex, f64)], neighbors: &[(Vertex, f64)]) -> Vec<(Vertex, f64)> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < candidates.len() && j < neighbors.len() {
        match candidates[i].0.cmp(&neighbors[j].0) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                out.push((candidates[i].0, candidates[i].1.max(neighbors[j].1)));
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// A simplex whose face is absent from the complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub simplex: Simplex,
    pub missing_face: Simplex,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} is missing face {}", self.simplex, self.missing_face)
    }
}

/// Reports every missing codimension-one face. An empty result means the
/// set is closed under faces.
pub fn validate_complex<'a, I>(simplices: I) -> Vec<Violation>
where
    I: IntoIterator<Item = &'a Simplex>,
{
    let set: HashSet<&Simplex> = simplices.into_iter().collect();
    let mut sorted: Vec<&Simplex> = set.iter().copied().collect();
    sorted.sort();
    let mut out = Vec::new();
    for s in sorted {
        for (face, _) in s.faces() {
            if !set.contains(&face) {
                out.push(Violation {
                    simplex: s.clone(),
                    missing_face: face,
                });
            }
        }
    }
    out
}
