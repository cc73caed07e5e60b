//! Reference tables bundled in `golden/*.json`.
//!
//! The files are embedded at compile time. [`Golden::load_dir`] reads a
//! directory with the same file names instead, which is how the CLI's
//! `--golden` flag swaps in a (possibly corrupted) copy.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::OnceLock;

use serde::Deserialize;

use crate::exactnum::{Matrix, Poly, PolyRing, Q};
use crate::exterior::{IndexSet, MultiVector, VectorValuedForm};
use crate::liegroups::WeightVector;

#[derive(Debug, thiserror::Error)]
pub enum GoldenError {
    #[error("reading {file}: {source}")]
    Io { file: String, source: std::io::Error },
    #[error("parsing {file}: {msg}")]
    Parse { file: String, msg: String },
}

pub const FILES: [&str; 11] = [
    "forms.json",
    "eigenbasis.json",
    "lambda4_weights.json",
    "fixed_points.json",
    "ftilde.json",
    "localized_u0123.json",
    "jacobian_0123.json",
    "singular_points.json",
    "sigma_generators.json",
    "tangent_weights.json",
    "unipotent.json",
];

fn embedded(name: &str) -> &'static str {
    match name {
        "forms.json" => include_str!("../golden/forms.json"),
        "eigenbasis.json" => include_str!("../golden/eigenbasis.json"),
        "lambda4_weights.json" => include_str!("../golden/lambda4_weights.json"),
        "fixed_points.json" => include_str!("../golden/fixed_points.json"),
        "ftilde.json" => include_str!("../golden/ftilde.json"),
        "localized_u0123.json" => include_str!("../golden/localized_u0123.json"),
        "jacobian_0123.json" => include_str!("../golden/jacobian_0123.json"),
        "singular_points.json" => include_str!("../golden/singular_points.json"),
        "sigma_generators.json" => include_str!("../golden/sigma_generators.json"),
        "tangent_weights.json" => include_str!("../golden/tangent_weights.json"),
        "unipotent.json" => include_str!("../golden/unipotent.json"),
        _ => unreachable!("unknown golden file {name}"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Forms {
    pub phi: MultiVector,
    pub big_phi: MultiVector,
    pub xi: VectorValuedForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenEntry {
    pub index: usize,
    pub weight: WeightVector,
    pub vector: [Q; 8],
}

/// One row of an eigenvalue | eigenvector table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightRow {
    pub weight: WeightVector,
    pub sets: Vec<IndexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentVector {
    pub vector: BTreeMap<IndexSet, Q>,
    pub weight: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentTable {
    pub point: IndexSet,
    pub chart: IndexSet,
    pub vectors: Vec<TangentVector>,
    pub positive_count: usize,
}

#[derive(Clone, Debug)]
pub struct SigmaData {
    pub chart: IndexSet,
    pub variables: Vec<IndexSet>,
    /// Each generator as a linear polynomial in the chart variables.
    pub generators: Vec<Poly>,
    pub ring: PolyRing,
}

#[derive(Clone, Debug)]
pub struct Golden {
    pub forms: Forms,
    pub eigenbasis: Vec<EigenEntry>,
    pub lambda4: Vec<WeightRow>,
    pub fixed_points: Vec<WeightRow>,
    pub ftilde: Vec<MultiVector>,
    pub localized_u0123_ring: PolyRing,
    pub localized_u0123: Vec<Poly>,
    pub jacobian_0123: Matrix<Q>,
    pub singular_points: Vec<IndexSet>,
    pub sigma: SigmaData,
    pub tangent: Vec<TangentTable>,
    pub subgroup: [i64; 3],
    pub unipotent_a: Matrix<Poly>,
    pub unipotent_b: Matrix<Poly>,
}

mod raw {
    use super::*;

    #[derive(Deserialize)]
    pub struct Forms {
        pub phi: String,
        #[serde(rename = "Phi")]
        pub big_phi: String,
        #[serde(rename = "Xi")]
        pub xi: BTreeMap<String, String>,
    }

    #[derive(Deserialize)]
    pub struct EigenEntry {
        pub index: usize,
        pub weight: [i64; 3],
        pub vector: Vec<Q>,
    }

    #[derive(Deserialize)]
    pub struct Eigenbasis {
        pub entries: Vec<EigenEntry>,
    }

    #[derive(Deserialize)]
    pub struct Row {
        pub weight: [i64; 3],
        pub sets: Vec<IndexSet>,
    }

    #[derive(Deserialize)]
    pub struct Rows {
        pub rows: Vec<Row>,
    }

    #[derive(Deserialize)]
    pub struct Ftilde {
        pub functionals: Vec<String>,
    }

    #[derive(Deserialize)]
    pub struct Localized {
        pub variables: Vec<IndexSet>,
        pub equations: BTreeMap<String, String>,
    }

    #[derive(Deserialize)]
    pub struct Jacobian {
        pub matrix: Matrix<Q>,
    }

    #[derive(Deserialize)]
    pub struct Singular {
        pub points: Vec<IndexSet>,
    }

    #[derive(Deserialize)]
    pub struct Sigma {
        pub chart: IndexSet,
        pub variables: Vec<IndexSet>,
        pub generators: Vec<String>,
    }

    #[derive(Deserialize)]
    pub struct TangentVector {
        pub vector: BTreeMap<IndexSet, Q>,
        pub weight: i64,
    }

    #[derive(Deserialize)]
    pub struct TangentTable {
        pub point: IndexSet,
        pub chart: IndexSet,
        pub vectors: Vec<TangentVector>,
        pub positive_count: usize,
    }

    #[derive(Deserialize)]
    pub struct Tangent {
        pub subgroup: [i64; 3],
        pub points: Vec<TangentTable>,
    }

    #[derive(Deserialize)]
    pub struct Unipotent {
        #[serde(rename = "A")]
        pub a: Vec<Vec<String>>,
        #[serde(rename = "B")]
        pub b: Vec<Vec<String>>,
    }
}

/// Names `q0124`, … for a list of chart variables.
pub fn chart_ring(vars: &[IndexSet]) -> PolyRing {
    PolyRing::new(vars.iter().map(|v| format!("q{v}")))
}

impl Golden {
    /// Parse from a text source per file name.
    fn from_source(read: impl Fn(&str) -> Result<String, GoldenError>) -> Result<Self, GoldenError> {
        fn parse<T: for<'de> Deserialize<'de>>(file: &str, text: &str) -> Result<T, GoldenError> {
            serde_json::from_str(text).map_err(|e| GoldenError::Parse { file: file.into(), msg: e.to_string() })
        }
        let perr = |file: &str, msg: String| GoldenError::Parse { file: file.into(), msg };

        let f = "forms.json";
        let r: raw::Forms = parse(f, &read(f)?)?;
        let form = |g, s: &str| MultiVector::parse_terms(g, s).map_err(|e| perr(f, e.to_string()));
        let mut comps: Vec<MultiVector> = Vec::new();
        for k in 1..=7 {
            let s = r.xi.get(&k.to_string()).ok_or_else(|| perr(f, format!("missing Xi component {k}")))?;
            comps.push(form(4, s)?);
        }
        let forms = Forms {
            phi: form(3, &r.phi)?,
            big_phi: form(4, &r.big_phi)?,
            xi: VectorValuedForm { components: comps.try_into().expect("seven") },
        };

        let f = "eigenbasis.json";
        let r: raw::Eigenbasis = parse(f, &read(f)?)?;
        let eigenbasis = r
            .entries
            .into_iter()
            .map(|e| {
                let vector: [Q; 8] = e.vector.try_into().map_err(|_| perr(f, "vector length".into()))?;
                Ok(EigenEntry { index: e.index, weight: WeightVector::from(e.weight), vector })
            })
            .collect::<Result<_, GoldenError>>()?;

        let rows = |f: &str| -> Result<Vec<WeightRow>, GoldenError> {
            let r: raw::Rows = parse(f, &read(f)?)?;
            Ok(r.rows.into_iter().map(|r| WeightRow { weight: r.weight.into(), sets: r.sets }).collect())
        };
        let lambda4 = rows("lambda4_weights.json")?;
        let fixed_points = rows("fixed_points.json")?;

        let f = "ftilde.json";
        let r: raw::Ftilde = parse(f, &read(f)?)?;
        let ftilde = r
            .functionals
            .iter()
            .map(|s| MultiVector::parse_terms(4, s).map_err(|e| perr(f, e.to_string())))
            .collect::<Result<_, _>>()?;

        let f = "localized_u0123.json";
        let r: raw::Localized = parse(f, &read(f)?)?;
        let ring = chart_ring(&r.variables);
        let mut localized = Vec::new();
        for k in 1..=7 {
            let s = r.equations.get(&format!("f{k}")).ok_or_else(|| perr(f, format!("missing f{k}")))?;
            localized.push(ring.parse(s).map_err(|e| perr(f, e.to_string()))?);
        }

        let f = "jacobian_0123.json";
        let jacobian_0123 = parse::<raw::Jacobian>(f, &read(f)?)?.matrix;

        let f = "singular_points.json";
        let singular_points = parse::<raw::Singular>(f, &read(f)?)?.points;

        let f = "sigma_generators.json";
        let r: raw::Sigma = parse(f, &read(f)?)?;
        let sring = chart_ring(&r.variables);
        let generators =
            r.generators.iter().map(|g| sring.parse(g).map_err(|e| perr(f, e.to_string()))).collect::<Result<_, _>>()?;
        let sigma = SigmaData { chart: r.chart, variables: r.variables, generators, ring: sring };

        let f = "tangent_weights.json";
        let r: raw::Tangent = parse(f, &read(f)?)?;
        let subgroup = r.subgroup;
        let tangent = r
            .points
            .into_iter()
            .map(|t| TangentTable {
                point: t.point,
                chart: t.chart,
                vectors: t.vectors.into_iter().map(|v| TangentVector { vector: v.vector, weight: v.weight }).collect(),
                positive_count: t.positive_count,
            })
            .collect();

        let f = "unipotent.json";
        let r: raw::Unipotent = parse(f, &read(f)?)?;
        let uring = PolyRing::new(["u"]);
        let mat = |rows: &[Vec<String>]| -> Result<Matrix<Poly>, GoldenError> {
            let parsed = rows
                .iter()
                .map(|row| row.iter().map(|c| uring.parse(c).map_err(|e| perr(f, e.to_string()))).collect())
                .collect::<Result<Vec<Vec<Poly>>, _>>()?;
            Matrix::from_rows(parsed).map_err(|e| perr(f, e.to_string()))
        };

        Ok(Golden {
            forms,
            eigenbasis,
            lambda4,
            fixed_points,
            ftilde,
            localized_u0123_ring: ring,
            localized_u0123: localized,
            jacobian_0123,
            singular_points,
            sigma,
            tangent,
            subgroup,
            unipotent_a: mat(&r.a)?,
            unipotent_b: mat(&r.b)?,
        })
    }

    pub fn embedded() -> Result<Self, GoldenError> {
        Self::from_source(|name| Ok(embedded(name).to_string()))
    }

    /// Load from a directory holding files named as in [`FILES`]; files that
    /// are absent fall back to the embedded copy.
    pub fn load_dir(dir: &Path) -> Result<Self, GoldenError> {
        Self::from_source(|name| {
            let p = dir.join(name);
            if p.exists() {
                std::fs::read_to_string(&p).map_err(|source| GoldenError::Io { file: p.display().to_string(), source })
            } else {
                Ok(embedded(name).to_string())
            }
        })
    }

    pub fn tangent_table(&self, point: IndexSet) -> Option<&TangentTable> {
        self.tangent.iter().find(|t| t.point == point)
    }
}

/// The embedded tables, parsed once.
pub fn bundled() -> &'static Golden {
    static G: OnceLock<Golden> = OnceLock::new();
    G.get_or_init(|| Golden::embedded().expect("embedded golden tables parse"))
}

/// Raw text of an embedded file, for writing a copy to disk.
pub fn embedded_text(name: &str) -> Option<&'static str> {
    FILES.contains(&name).then(|| embedded(name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_tables_parse_with_expected_sizes() {
        let g = bundled();
        assert_eq!(g.forms.phi.len(), 7);
        assert_eq!(g.forms.big_phi.len(), 14);
        assert_eq!(g.forms.xi.term_count(), 56);
        assert_eq!(g.eigenbasis.len(), 8);
        assert_eq!(g.lambda4.iter().map(|r| r.sets.len()).sum::<usize>(), 70);
        assert_eq!(g.fixed_points.iter().map(|r| r.sets.len()).sum::<usize>(), 44);
        assert_eq!(g.ftilde.len(), 7);
        assert_eq!(g.localized_u0123.len(), 7);
        assert_eq!((g.jacobian_0123.rows(), g.jacobian_0123.cols()), (7, 16));
        assert_eq!(g.singular_points.len(), 6);
        assert_eq!(g.sigma.generators.len(), 11);
        assert_eq!(g.tangent.len(), 38);
        assert!(g.tangent.iter().all(|t| t.vectors.len() == 12));
        assert_eq!(g.subgroup, [1, 10, 100]);
    }

    #[test]
    fn missing_directory_files_fall_back() {
        let dir = std::env::temp_dir().join("cayley-golden-empty");
        std::fs::create_dir_all(&dir).unwrap();
        let g = Golden::load_dir(&dir).unwrap();
        assert_eq!(g.tangent.len(), 38);
    }
}
