use serde::{Deserialize, Serialize};

use super::{resolve, CoverStrategy, ProjectiveData, Resolution};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};
use crate::schur::{twist_label, AModule, SchurAlgebra, SchurCaps, WeightForm};
use crate::symchar::binomial;

/// Knobs for [`ext_table`].
#[derive(Clone, Copy, Debug)]
pub struct ExtConfig {
    /// Rank `n` of `S(n, dp^i)`; defaults to `dp^i`.
    pub n: Option<usize>,
    /// Highest Ext degree; defaults to the duality degree plus one.
    pub s_max: Option<usize>,
    /// Defaults to [`WeightForm::Full`] when `dim S(n, dp^i) ≤ full_form_max_dim`,
    /// else [`WeightForm::DominantCorner`].
    pub form: Option<WeightForm>,
    pub full_form_max_dim: usize,
    pub caps: SchurCaps,
    pub max_resolution_dim: usize,
}

impl Default for ExtConfig {
    fn default() -> Self {
        ExtConfig {
            n: None,
            s_max: None,
            form: None,
            full_form_max_dim: 200,
            caps: SchurCaps::default(),
            max_resolution_dim: 200_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtRow {
    pub mu: Partition,
    pub dims: Vec<usize>,
}

/// `dim Ext^s(L(p^i λ), L(μ))` for all `μ ⊢ dp^i` and `s = 0..=s_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtTable {
    pub p: u32,
    pub d: usize,
    pub i: u32,
    pub lambda: Partition,
    pub duality_degree: usize,
    pub rows: Vec<ExtRow>,
}

impl ExtTable {
    pub fn row(&self, mu: &Partition) -> Option<&[usize]> {
        self.rows.iter().find(|r| &r.mu == mu).map(|r| r.dims.as_slice())
    }

    pub fn s_max(&self) -> usize {
        self.rows.first().map_or(0, |r| r.dims.len().saturating_sub(1))
    }

    /// CSV with header `mu,s0,s1,...`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("mu");
        for s in 0..=self.s_max() {
            out.push_str(&format!(",s{s}"));
        }
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!("\"{}\"", r.mu));
            for v in &r.dims {
                out.push_str(&format!(",{v}"));
            }
            out.push('\n');
        }
        out
    }

    /// Rows violating `entry(μ, s) = entry(μ, D − s)` for `0 ≤ s ≤ D`.
    pub fn palindrome_failures(&self) -> Vec<(Partition, usize)> {
        let dd = self.duality_degree;
        let mut out = Vec::new();
        for r in &self.rows {
            for s in 0..=dd {
                let a = r.dims.get(s).copied();
                let b = r.dims.get(dd - s).copied();
                if a.is_some() && b.is_some() && a != b {
                    out.push((r.mu.clone(), s));
                }
            }
        }
        out
    }
}

/// All intermediate objects of an Ext computation, kept for cross-checks.
#[derive(Clone, Debug)]
pub struct ExtComputation {
    pub schur: SchurAlgebra,
    pub labels: Vec<Partition>,
    pub data: ProjectiveData,
    pub source: usize,
    pub resolution: Resolution,
    pub table: ExtTable,
}

impl ExtComputation {
    pub fn simple(&self, mu: &Partition) -> Option<&AModule> {
        self.labels.iter().position(|l| l == mu).map(|k| &self.data.simples[k])
    }
}

/// Builds `S(n, dp^i)`, its simples and PIMs, and the minimal resolution of
/// `L(p^i λ)`.
pub fn ext_table(lambda: &Partition, p: u32, d: usize, i: u32, cfg: &ExtConfig) -> Result<ExtComputation> {
    if lambda.weight() != d {
        return Err(Error::WeightMismatch {
            lambda: lambda.clone(),
            d,
        });
    }
    let deg = d * (p as usize).pow(i);
    let n = cfg.n.unwrap_or(deg);
    let duality_degree = 2 * d * ((p as usize).pow(i) - 1);
    let s_max = cfg.s_max.unwrap_or(duality_degree + 1);
    let form = cfg.form.unwrap_or_else(|| {
        let full = binomial((n * n + deg - 1) as u64, deg as u64);
        if full as usize <= cfg.full_form_max_dim {
            WeightForm::Full
        } else {
            WeightForm::DominantCorner
        }
    });
    let source_label = twist_label(lambda, p, i);
    if source_label.len() > n {
        return Err(Error::TooManyRows {
            lambda: source_label,
            n,
        });
    }
    let schur = SchurAlgebra::new(n, deg, p, form, &cfg.caps)?;
    let labels = schur.simple_labels();
    let simples = labels
        .iter()
        .map(|l| schur.simple_module(l))
        .collect::<Result<Vec<_>>>()?;
    let data = ProjectiveData::new(schur.algebra(), simples)?;
    let source = labels
        .iter()
        .position(|l| *l == source_label)
        .expect("twisted label is a partition of dp^i");
    let resolution = resolve(
        schur.algebra(),
        &data,
        &data.simples[source],
        s_max,
        CoverStrategy::Minimal,
        cfg.max_resolution_dim,
    )?;
    let rows = enumerate_partitions(deg)
        .into_iter()
        .filter_map(|mu| {
            let k = labels.iter().position(|l| *l == mu)?;
            Some(ExtRow {
                dims: (0..=s_max).map(|s| resolution.multiplicity(s, k)).collect(),
                mu,
            })
        })
        .collect();
    let table = ExtTable {
        p,
        d,
        i,
        lambda: lambda.clone(),
        duality_degree,
        rows,
    };
    Ok(ExtComputation {
        schur,
        labels,
        data,
        source,
        resolution,
        table,
    })
}
