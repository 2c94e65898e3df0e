//! Serializable outputs of each subcommand and their text/CSV renderings.
//!
//! JSON is the serde form of these structs; CSV carries the same numbers,
//! one row per table entry.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use theta_lambda::rational::{self, serde_bigint, serde_one};
use theta_lambda::{
    BiThetaClass, CensusRow, CriterionInput, CriterionVerdict, ExclusionReport, IntPolynomial,
    PrymLocus, Rational, ThetaClass,
};

pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

pub trait Report: Serialize {
    fn text(&self) -> String;
    fn table(&self) -> Table;
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub order: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerianReport {
    pub n: usize,
    pub polynomial: IntPolynomial,
    pub check: Option<IdentityCheck>,
}

impl Report for EulerianReport {
    fn text(&self) -> String {
        let mut s = format!("{}\n", self.polynomial);
        if let Some(c) = &self.check {
            let status = if c.holds { "holds" } else { "FAILS" };
            let _ = writeln!(s, "defining identity through x^{}: {status}", c.order);
        }
        s
    }

    fn table(&self) -> Table {
        let mut header = vec!["n", "power", "coefficient"];
        if self.check.is_some() {
            header.extend(["check_order", "check_holds"]);
        }
        let rows = self
            .polynomial
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let mut row = vec![self.n.to_string(), i.to_string(), c.to_string()];
                if let Some(chk) = &self.check {
                    row.extend([chk.order.to_string(), chk.holds.to_string()]);
                }
                row
            })
            .collect();
        Table { header, rows }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EcoefReport {
    pub n: i64,
    pub g: usize,
    pub k: usize,
    pub index: Vec<u32>,
    #[serde(with = "serde_one")]
    pub value: Rational,
}

impl Report for EcoefReport {
    fn text(&self) -> String {
        format!(
            "E^{}_{}({}) = {}\n",
            self.n,
            self.k,
            join(&self.index),
            self.value
        )
    }

    fn table(&self) -> Table {
        Table {
            header: vec!["n", "g", "k", "index", "value"],
            rows: vec![vec![
                self.n.to_string(),
                self.g.to_string(),
                self.k.to_string(),
                join(&self.index),
                rational::format(&self.value),
            ]],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub r: usize,
    #[serde(with = "serde_one")]
    pub multiplier: Rational,
    pub class: ThetaClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobianClassesReport {
    pub g: usize,
    pub case: String,
    #[serde(with = "serde_bigint")]
    pub dim_omega: BigInt,
    pub classes: Vec<ClassEntry>,
}

impl Report for JacobianClassesReport {
    fn text(&self) -> String {
        let mut s = format!(
            "g = {}, case = {}, dim omega = {}\n",
            self.g, self.case, self.dim_omega
        );
        for e in &self.classes {
            let _ = writeln!(s, "c_M,{} = {}", e.r, e.class);
        }
        s
    }

    fn table(&self) -> Table {
        Table {
            header: vec!["g", "case", "r", "multiplier"],
            rows: self
                .classes
                .iter()
                .map(|e| {
                    vec![
                        self.g.to_string(),
                        self.case.clone(),
                        e.r.to_string(),
                        rational::format(&e.multiplier),
                    ]
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub input: CriterionInput,
    pub result: CriterionVerdict,
    pub scale_factors: Vec<i64>,
    pub scale_invariant: bool,
}

impl Report for CriterionReport {
    fn text(&self) -> String {
        let i = &self.input;
        let mut s = format!(
            "g = {}, case = {}, observed (c0, c1, c2) = ({}, {}, {}), problematic codim = {}\n",
            i.g, i.case, i.c0, i.c1, i.c2, i.problematic_codim
        );
        for eq in &self.result.equations {
            let _ = writeln!(s, "  {eq}");
        }
        if let Some(r) = &self.result.reconstruction {
            let _ = writeln!(
                s,
                "reconstruction: c0 = {}, c1 = {}, c2 = {}",
                r.c0, r.c1, r.c2
            );
        }
        let _ = writeln!(
            s,
            "verdict: {} ({})",
            self.result.verdict, self.result.reason
        );
        let _ = writeln!(
            s,
            "unchanged under [n]_* for n in {{{}}}: {}",
            join(&self.scale_factors),
            self.scale_invariant
        );
        s
    }

    fn table(&self) -> Table {
        let i = &self.input;
        let (rc0, rc1, rc2) = match &self.result.reconstruction {
            Some(r) => (
                r.c0.to_string(),
                rational::format(&r.c1),
                rational::format(&r.c2),
            ),
            None => Default::default(),
        };
        Table {
            header: vec![
                "g",
                "case",
                "c0",
                "c1",
                "c2",
                "codim",
                "verdict",
                "rec_c0",
                "rec_c1",
                "rec_c2",
                "scale_invariant",
            ],
            rows: vec![vec![
                i.g.to_string(),
                i.case.short_name().to_string(),
                rational::format(&i.c0),
                rational::format(&i.c1),
                rational::format(&i.c2),
                i.problematic_codim.to_string(),
                self.result.verdict.to_string(),
                rc0,
                rc1,
                rc2,
                self.scale_invariant.to_string(),
            ]],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrymChiReport {
    pub rows: Vec<CensusRow>,
}

fn locus_kind(l: &PrymLocus) -> &'static str {
    match l {
        PrymLocus::EPrime { .. } => "EPrime",
        PrymLocus::SCycle { .. } => "SCycle",
    }
}

impl Report for PrymChiReport {
    fn text(&self) -> String {
        let mut s = String::new();
        for row in &self.rows {
            let jac = if row.matches_jacobian {
                "  [Jacobian dimension]"
            } else {
                ""
            };
            let _ = writeln!(s, "chi({}) {}{jac}", row.locus, row.chi);
            if let Some(n) = &row.note {
                let _ = writeln!(s, "  note: {n}");
            }
        }
        s
    }

    fn table(&self) -> Table {
        Table {
            header: vec![
                "g",
                "locus",
                "stratum",
                "k",
                "chi_tag",
                "chi_value",
                "matches_jacobian",
            ],
            rows: self
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.g.to_string(),
                        locus_kind(&r.locus).to_string(),
                        r.stratum.clone(),
                        r.k.to_string(),
                        r.chi.tag().to_string(),
                        r.chi.number().map(ToString::to_string).unwrap_or_default(),
                        r.matches_jacobian.to_string(),
                    ]
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PrymClass {
    Theta(ThetaClass),
    BiTheta(BiThetaClass),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrymClassEntry {
    pub r: usize,
    pub class: PrymClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrymClassesReport {
    pub g: usize,
    pub t: usize,
    pub convention: Option<String>,
    pub classes: Vec<PrymClassEntry>,
}

impl Report for PrymClassesReport {
    fn text(&self) -> String {
        let mut s = format!("E'_({},{})\n", self.g, self.t);
        if let Some(c) = &self.convention {
            let _ = writeln!(s, "convention: {c}");
        }
        for e in &self.classes {
            let body = match &e.class {
                PrymClass::Theta(c) => c.to_string(),
                PrymClass::BiTheta(c) => c.to_string(),
            };
            let _ = writeln!(s, "c_M,{} = {body}", e.r);
        }
        s
    }

    /// Theta classes use `a` for the degree and leave `b` empty.
    fn table(&self) -> Table {
        let mut rows = Vec::new();
        for e in &self.classes {
            let base = [self.g.to_string(), self.t.to_string(), e.r.to_string()];
            match &e.class {
                PrymClass::Theta(c) => {
                    for (d, q) in c.coeffs().iter().enumerate().filter(|(_, q)| !q.is_zero()) {
                        let mut row = base.to_vec();
                        row.extend([d.to_string(), String::new(), rational::format(q)]);
                        rows.push(row);
                    }
                }
                PrymClass::BiTheta(c) => {
                    for (a, b, q) in c.terms() {
                        let mut row = base.to_vec();
                        row.extend([a.to_string(), b.to_string(), rational::format(q)]);
                        rows.push(row);
                    }
                }
            }
        }
        Table {
            header: vec!["g", "t", "r", "a", "b", "coeff"],
            rows,
        }
    }
}

impl Report for ExclusionReport {
    fn text(&self) -> String {
        let mut s = format!(
            "dim omega = {}\n[2]_* multiplier on degree one = {}\nAlt^4 - Alt^2 multiplier = {}\n",
            self.dim_omega, self.lhs_multiplier, self.rhs_multiplier
        );
        for ((locus, chi), (p, v)) in self
            .candidate_loci
            .iter()
            .zip(&self.candidate_chi)
            .zip(self.pairing_values.iter().zip(&self.verdicts))
        {
            let _ = writeln!(
                s,
                "{locus}: chi {chi}, pairing {}, {} * {} divisible by {}: {} (residue {})",
                p.value, self.lhs_multiplier, p.value, self.rhs_multiplier, v.divisible, v.residue
            );
        }
        let _ = writeln!(s, "excluded: {}", self.excluded);
        for src in &self.sources {
            let _ = writeln!(s, "  source: {src}");
        }
        s
    }

    fn table(&self) -> Table {
        let rows = self
            .pairing_values
            .iter()
            .zip(&self.verdicts)
            .zip(&self.candidate_chi)
            .zip(&self.candidate_loci)
            .map(|(((p, v), chi), locus)| {
                vec![
                    join(&p.partition),
                    locus.k().to_string(),
                    chi.tag().to_string(),
                    self.dim_omega.to_string(),
                    self.lhs_multiplier.to_string(),
                    self.rhs_multiplier.to_string(),
                    p.value.to_string(),
                    v.divisible.to_string(),
                    v.residue.to_string(),
                ]
            })
            .collect();
        Table {
            header: vec![
                "partition",
                "k",
                "chi_tag",
                "dim_omega",
                "lhs_multiplier",
                "rhs_multiplier",
                "pairing",
                "divisible",
                "residue",
            ],
            rows,
        }
    }
}
