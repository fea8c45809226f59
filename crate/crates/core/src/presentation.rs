//! The matrices M(f_1, ..., f_r; d) over R_0 whose cokernel is the degree −d
//! component of the top local cohomology of R.

use crate::algebra::{GradedRingSpec, R0Element, SPolynomial};
use crate::error::{Error, Result};
use crate::invpoly::{enumerate_basis, module_action, ComponentBasis, InverseMonomial};
use crate::linalg::Matrix;

/// A column label: the generator index (0-based) and U^β ∈ B(d + δ_i).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColumnLabel {
    pub generator: usize,
    pub monomial: InverseMonomial,
}

/// M(f_1, ..., f_r; d) with its row and column labels.
///
/// Columns are grouped by generator in input order, each block ascending.
#[derive(Clone, Debug)]
pub struct ComponentMatrix {
    d: u64,
    row_basis: ComponentBasis,
    columns: Vec<ColumnLabel>,
    entries: Matrix<R0Element>,
}

impl ComponentMatrix {
    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn row_basis(&self) -> &ComponentBasis {
        &self.row_basis
    }

    pub fn columns(&self) -> &[ColumnLabel] {
        &self.columns
    }

    pub fn entries(&self) -> &Matrix<R0Element> {
        &self.entries
    }

    pub fn rows(&self) -> usize {
        self.entries.rows()
    }

    pub fn cols(&self) -> usize {
        self.entries.cols()
    }

    /// Tab-separated layout: a header of column labels `f<i>:(β)`, then one
    /// line per row basis element `(α)` followed by its entries.
    pub fn to_text(&self, spec: &GradedRingSpec) -> String {
        let mut out = String::from("B(d)");
        for c in &self.columns {
            out.push_str(&format!("\tf{}:{}", c.generator + 1, c.monomial));
        }
        out.push('\n');
        for (i, alpha) in self.row_basis.elements().iter().enumerate() {
            out.push_str(&alpha.to_string());
            for a in self.entries.row(i) {
                out.push('\t');
                out.push_str(&spec.display_element(a));
            }
            out.push('\n');
        }
        out
    }
}

fn block(
    f: &SPolynomial,
    delta: u64,
    index: usize,
    rows: &ComponentBasis,
    weights: &[u64],
    zero: &R0Element,
) -> (Vec<ColumnLabel>, Matrix<R0Element>) {
    let cols = enumerate_basis(rows.d() + delta, weights);
    let labels = cols
        .elements()
        .iter()
        .map(|beta| ColumnLabel {
            generator: index,
            monomial: beta.clone(),
        })
        .collect();
    let mut m = Matrix::filled(rows.len(), cols.len(), zero.clone());
    for (j, beta) in cols.elements().iter().enumerate() {
        for (alpha, a) in module_action(f, beta).terms() {
            // f·U^β is homogeneous of degree −d, so every surviving term is a row.
            let i = rows.position(alpha).expect("product lands in B(d)");
            m.set(i, j, a.clone());
        }
    }
    (labels, m)
}

/// M(f; d) for a single homogeneous f over the ring of `spec`.
pub fn build_single(f: &SPolynomial, d: u64, spec: &GradedRingSpec) -> Result<ComponentMatrix> {
    if f.base() != spec.coeff().base() || f.coeff_vars() != spec.coeff().nvars() || f.nvars() != spec.s() {
        return Err(Error::RingMismatch(
            "polynomial is not over the ring of the problem".into(),
        ));
    }
    let delta = match f.homogeneous_degree(spec.weights()) {
        Ok(Some(delta)) => delta,
        Ok(None) => return Err(Error::Homogeneity(spec.display_generator(f))),
        Err(e) => return Err(e),
    };
    let rows = enumerate_basis(d, spec.weights());
    let (columns, entries) = block(f, delta, 0, &rows, spec.weights(), &spec.coeff().zero());
    Ok(ComponentMatrix {
        d,
        row_basis: rows,
        columns,
        entries,
    })
}

/// M(f_1, ..., f_r; d): the blocks M(f_i; d) side by side.
pub fn build_multi(spec: &GradedRingSpec, d: u64) -> ComponentMatrix {
    let rows = enumerate_basis(d, spec.weights());
    let zero = spec.coeff().zero();
    let mut columns = Vec::new();
    let mut entries = Matrix::filled(rows.len(), 0, zero.clone());
    for (i, (f, &delta)) in spec.generators().iter().zip(spec.degrees()).enumerate() {
        let (labels, m) = block(f, delta, i, &rows, spec.weights(), &zero);
        columns.extend(labels);
        entries = entries.hconcat(&m).expect("blocks share the row basis");
    }
    ComponentMatrix {
        d,
        row_basis: rows,
        columns,
        entries,
    }
}
