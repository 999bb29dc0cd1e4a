//! JSON formats: sparse matrices, invariant bases and reports.

use anyhow::{bail, ensure, Context, Result};
use braidrep_core::elliptic::{InvariantBasis, InvariantVector};
use braidrep_core::linalg::SparseMat;
use braidrep_core::rea::Layout;
use braidrep_core::report::{Outcome, Report};
use braidrep_core::scalars::{format_jet, format_ratfunc, parse_jet, parse_ratfunc, Jet, RatFunc, Ring};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

/// Exact scalars with a canonical text form that round-trips bit for bit.
pub trait ScalarText: Ring {
    fn to_text(&self) -> String;
    fn from_text(text: &str) -> Result<Self>;
}

impl ScalarText for RatFunc {
    fn to_text(&self) -> String {
        format_ratfunc(self, 's')
    }

    fn from_text(text: &str) -> Result<Self> {
        Ok(parse_ratfunc(text, 's')?)
    }
}

impl ScalarText for Jet {
    fn to_text(&self) -> String {
        format_jet(self)
    }

    fn from_text(text: &str) -> Result<Self> {
        Ok(parse_jet(text)?)
    }
}

impl ScalarText for BigRational {
    fn to_text(&self) -> String {
        self.to_string()
    }

    fn from_text(text: &str) -> Result<Self> {
        text.parse().with_context(|| format!("bad rational {text:?}"))
    }
}

/// `{ "rows", "cols", "entries": [[r, c, "scalar"], …] }` with entries sorted by `(r, c)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, String)>,
}

impl MatrixJson {
    pub fn from_matrix<T: ScalarText>(m: &SparseMat<T>) -> Self {
        let mut entries: Vec<_> = m.entries().map(|(r, c, x)| (r, c, x.to_text())).collect();
        entries.sort_by_key(|e| (e.0, e.1));
        MatrixJson {
            rows: m.rows(),
            cols: m.cols(),
            entries,
        }
    }

    pub fn to_matrix<T: ScalarText>(&self) -> Result<SparseMat<T>> {
        let mut triplets = Vec::with_capacity(self.entries.len());
        for (r, c, x) in &self.entries {
            ensure!(
                *r < self.rows && *c < self.cols,
                "entry ({r}, {c}) outside {}x{}",
                self.rows,
                self.cols
            );
            triplets.push((*r, *c, T::from_text(x)?));
        }
        Ok(SparseMat::from_triplets(self.rows, self.cols, triplets))
    }
}

/// An invariant basis: the basis vectors as matrix columns with their layers and pivots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisJson {
    pub n: usize,
    #[serde(rename = "K")]
    pub k: usize,
    pub layers: Vec<usize>,
    pub pivots: Vec<usize>,
    pub vectors: MatrixJson,
}

impl BasisJson {
    pub fn from_basis(b: &InvariantBasis) -> Self {
        BasisJson {
            n: b.n,
            k: b.k,
            layers: b.vectors.iter().map(|v| v.layer).collect(),
            pivots: b.vectors.iter().map(|v| v.pivot).collect(),
            vectors: MatrixJson::from_matrix(&b.basis_matrix()),
        }
    }

    pub fn to_basis(&self) -> Result<InvariantBasis> {
        let layout = Layout::new(self.k);
        let ambient = (1usize << self.n) * layout.dim();
        let m: SparseMat<RatFunc> = self.vectors.to_matrix()?;
        let count = self.layers.len();
        ensure!(
            m.rows() == ambient && m.cols() == count && self.pivots.len() == count,
            "basis shape does not match n = {}, K = {}",
            self.n,
            self.k
        );
        let t = m.transpose();
        let vectors = (0..count)
            .map(|c| {
                let mut vector = vec![RatFunc::zero(); ambient];
                for (r, x) in t.row(c) {
                    vector[*r] = x.clone();
                }
                InvariantVector {
                    layer: self.layers[c],
                    pivot: self.pivots[c],
                    vector,
                }
            })
            .collect();
        Ok(InvariantBasis {
            n: self.n,
            k: self.k,
            layout,
            vectors,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeJson {
    pub name: String,
    pub window: Option<i64>,
    pub status: String,
    pub control: bool,
    pub detail: String,
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub title: String,
    pub passed: bool,
    pub facts: Vec<(String, String)>,
    pub notes: Vec<String>,
    pub outcomes: Vec<OutcomeJson>,
}

impl ReportJson {
    pub fn from_report(r: &Report) -> Self {
        let outcome = |o: &Outcome| OutcomeJson {
            name: o.name.clone(),
            window: o.window,
            status: o.status().to_string(),
            control: o.control,
            detail: o.detail.clone(),
            elapsed_ms: o.elapsed_ms,
        };
        ReportJson {
            title: r.title.clone(),
            passed: r.all_passed(),
            facts: r.facts.clone(),
            notes: r.notes.clone(),
            outcomes: r.outcomes.iter().map(outcome).collect(),
        }
    }
}

/// Serialize with a trailing newline; the output depends only on the value.
pub fn to_text<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string(value)?;
    s.push('\n');
    Ok(s)
}

pub fn from_text<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    match serde_json::from_str(text) {
        Ok(v) => Ok(v),
        Err(e) => bail!("malformed JSON: {e}"),
    }
}
