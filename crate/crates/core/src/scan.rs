//! Census of triangle-distinct graphs over graph6 streams, the embedded
//! reference graphs, and graph verification.

use crate::adjlist::{parse_adjacency_document, to_adjacency_list};
use crate::error::ScanError;
use crate::graph::{Graph, TriangleProfile};
use crate::graph6::decode_graph6;
use crate::objectives::{f1, f2, f3, is_triangle_distinct};
use std::collections::BTreeMap;
use std::io::{BufRead, Write};

pub const FIXTURE_COUNT: usize = 11;

const FIXTURE_TEXT: [&str; FIXTURE_COUNT] = [
    include_str!("../fixtures/graph01.txt"),
    include_str!("../fixtures/graph02.txt"),
    include_str!("../fixtures/graph03.txt"),
    include_str!("../fixtures/graph04.txt"),
    include_str!("../fixtures/graph05.txt"),
    include_str!("../fixtures/graph06.txt"),
    include_str!("../fixtures/graph07.txt"),
    include_str!("../fixtures/graph08.txt"),
    include_str!("../fixtures/graph09.txt"),
    include_str!("../fixtures/graph10.txt"),
    include_str!("../fixtures/graph11.txt"),
];

/// Published (n, r) for each fixture id.
const FIXTURE_PARAMS: [(usize, usize); FIXTURE_COUNT] = [
    (21, 10),
    (21, 10),
    (21, 10),
    (21, 10),
    (22, 10),
    (23, 10),
    (24, 11),
    (24, 11),
    (25, 12),
    (26, 12),
    (27, 12),
];

/// A known regular triangle-distinct graph with its printed metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub id: usize,
    pub n: usize,
    pub r: usize,
    pub graph: Graph,
    pub published_t: Vec<u32>,
}

impl Fixture {
    /// The embedded neighbour-list text, including the `| t` column.
    pub fn source_text(&self) -> &'static str {
        FIXTURE_TEXT[self.id - 1]
    }
}

pub fn load_fixture(id: usize) -> Result<Fixture, ScanError> {
    if id == 0 || id > FIXTURE_COUNT {
        return Err(ScanError::UnknownFixture(id));
    }
    let doc = parse_adjacency_document(FIXTURE_TEXT[id - 1]).expect("embedded fixture parses");
    let (n, r) = FIXTURE_PARAMS[id - 1];
    Ok(Fixture {
        id,
        n,
        r,
        graph: doc.graph,
        published_t: doc.claimed_t.expect("embedded fixture carries t column"),
    })
}

pub fn all_fixtures() -> Vec<Fixture> {
    (1..=FIXTURE_COUNT)
        .map(|id| load_fixture(id).expect("fixture id in range"))
        .collect()
}

/// Counts for one order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OrderCounts {
    pub total: u64,
    pub td: u64,
    pub regular_td: u64,
}

impl OrderCounts {
    fn add(&mut self, other: &OrderCounts) {
        self.total += other.total;
        self.td += other.td;
        self.regular_td += other.regular_td;
    }

    /// TD share in percent, at full precision.
    pub fn td_percentage(&self) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            100.0 * self.td as f64 / self.total as f64
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CensusCounts {
    pub total: u64,
    pub td: u64,
    pub regular_td: u64,
    pub by_order: BTreeMap<usize, OrderCounts>,
    /// Lines skipped as malformed in lenient mode.
    pub skipped: u64,
}

impl CensusCounts {
    pub fn record(&mut self, g: &Graph) -> bool {
        let td = is_triangle_distinct(&g.triangle_profile());
        let one = OrderCounts {
            total: 1,
            td: u64::from(td),
            regular_td: u64::from(td && g.is_regular()),
        };
        self.total += one.total;
        self.td += one.td;
        self.regular_td += one.regular_td;
        self.by_order.entry(g.order()).or_default().add(&one);
        td
    }

    pub fn merge(&mut self, other: &CensusCounts) {
        self.total += other.total;
        self.td += other.td;
        self.regular_td += other.regular_td;
        self.skipped += other.skipped;
        for (n, c) in &other.by_order {
            self.by_order.entry(*n).or_default().add(c);
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ScanOptions {
    /// Echo the graph6 lines of TD graphs to the output.
    pub filter_td: bool,
    /// Abort on the first malformed line instead of skipping it.
    pub strict: bool,
}

/// Streams graph6 lines, one graph in memory at a time. Blank lines are
/// ignored. With `filter_td`, TD lines are copied to `out` verbatim.
pub fn scan_stream<R: BufRead, W: Write>(
    input: R,
    options: ScanOptions,
    mut out: Option<&mut W>,
) -> Result<CensusCounts, ScanError> {
    let mut counts = CensusCounts::default();
    for (idx, line) in input.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim_end();
        if trimmed.is_empty() {
            continue;
        }
        let g = match decode_graph6(trimmed) {
            Ok(g) => g,
            Err(source) if options.strict => {
                return Err(ScanError::Malformed {
                    line: idx + 1,
                    source,
                })
            }
            Err(_) => {
                counts.skipped += 1;
                continue;
            }
        };
        let td = counts.record(&g);
        if td && options.filter_td {
            if let Some(w) = out.as_mut() {
                writeln!(w, "{trimmed}")?;
            }
        }
    }
    Ok(counts)
}

/// Differences between a graph and claims made about it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mismatch {
    NotRegular,
    Degree {
        claimed: usize,
        actual: usize,
    },
    ProfileLength {
        claimed: usize,
        actual: usize,
    },
    TriangleDegree {
        vertex: usize,
        claimed: u32,
        actual: u32,
    },
}

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mismatch::NotRegular => write!(f, "graph is not regular"),
            Mismatch::Degree { claimed, actual } => {
                write!(f, "claimed degree {claimed}, actual {actual}")
            }
            Mismatch::ProfileLength { claimed, actual } => {
                write!(
                    f,
                    "claimed {claimed} triangle-degrees for {actual} vertices"
                )
            }
            Mismatch::TriangleDegree {
                vertex,
                claimed,
                actual,
            } => write!(
                f,
                "vertex {}: claimed t = {claimed}, actual {actual}",
                vertex + 1
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub n: usize,
    pub edges: usize,
    pub regular_degree: Option<usize>,
    pub profile: TriangleProfile,
    pub f1: usize,
    pub f2: u64,
    pub f3: f64,
    pub is_td: bool,
    pub mismatches: Vec<Mismatch>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// Neighbour-list rendering with the recomputed `| t` column.
    pub fn adjacency_text(&self, g: &Graph) -> String {
        to_adjacency_list(g, Some(&self.profile))
    }
}

pub fn verify_graph(
    g: &Graph,
    claimed_r: Option<usize>,
    claimed_t: Option<&[u32]>,
) -> VerificationReport {
    let profile = g.triangle_profile();
    let regular_degree = g.regular_degree();
    let mut mismatches = Vec::new();
    if let Some(claimed) = claimed_r {
        match regular_degree {
            None => mismatches.push(Mismatch::NotRegular),
            Some(actual) if actual != claimed => {
                mismatches.push(Mismatch::Degree { claimed, actual })
            }
            Some(_) => {}
        }
    }
    if let Some(claimed) = claimed_t {
        if claimed.len() != profile.len() {
            mismatches.push(Mismatch::ProfileLength {
                claimed: claimed.len(),
                actual: profile.len(),
            });
        } else {
            for (vertex, (&c, &a)) in claimed.iter().zip(profile.values()).enumerate() {
                if c != a {
                    mismatches.push(Mismatch::TriangleDegree {
                        vertex,
                        claimed: c,
                        actual: a,
                    });
                }
            }
        }
    }
    VerificationReport {
        n: g.order(),
        edges: g.edge_count(),
        regular_degree,
        f1: f1(&profile),
        f2: f2(&profile),
        f3: if g.order() >= 2 { f3(&profile) } else { 0.0 },
        is_td: is_triangle_distinct(&profile),
        profile,
        mismatches,
    }
}
