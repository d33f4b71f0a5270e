//! Machine-readable and text reports. The JSON field names are a stable
//! interface; byte-identical output for identical inputs is part of the
//! contract.

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub model: String,
    pub n: usize,
    pub per_k: Vec<PerK>,
    pub verdicts: Verdicts,
    pub bridge: Option<BridgeReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PerK {
    pub k: i64,
    pub gh_del: usize,
    pub gh_delbar: usize,
    pub gh_bc: usize,
    pub gh_a: usize,
    pub lemma: bool,
    pub varouchas: VarouchasReport,
    pub e1: usize,
    pub e_inf: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VarouchasReport {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub e: usize,
    pub f: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdicts {
    pub inequality: bool,
    pub equality: bool,
    pub lemma: bool,
    pub degeneration: bool,
    pub decomposition: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BridgeReport {
    Symplectic {
        betti: Vec<usize>,
        ty_bc: Vec<usize>,
        ty_a: Vec<usize>,
        ddlambda_lemma: bool,
        bc_geq_betti: bool,
        bc_equals_a: bool,
        equality_iff_lemma: bool,
        intertwining: bool,
    },
    Complex {
        h_del: Vec<Vec<usize>>,
        h_delbar: Vec<Vec<usize>>,
        h_bc: Vec<Vec<usize>>,
        h_a: Vec<Vec<usize>>,
        classical_lemma: bool,
        conjugation: bool,
        star_duality: bool,
        sums_match: bool,
        inequality: bool,
    },
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Fixed-width integer table with k as rows, plus the verdict lines.
    /// `pages` lists E_r dimensions per k for r = 1 ..= the display cap.
    pub fn to_text(&self, pages: &[Vec<usize>], betti: &[usize], color: bool) -> String {
        let mut out = String::new();
        let paint = |flag: bool| -> String {
            let word = if flag { "yes" } else { "no" };
            if color {
                if flag {
                    format!("\u{1b}[32m{word}\u{1b}[0m")
                } else {
                    format!("\u{1b}[31m{word}\u{1b}[0m")
                }
            } else {
                word.to_string()
            }
        };
        out.push_str(&format!("model: {} (n = {})\n", self.model, self.n));
        out.push_str(&format!(
            "betti: {}\n",
            betti
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        ));
        out.push_str(
            "   k  gh_del  gh_delbar  gh_bc  gh_a    a   b   c   d   e   f  lemma    E1  Einf\n",
        );
        for row in &self.per_k {
            out.push_str(&format!(
                "{:>4}  {:>6}  {:>9}  {:>5}  {:>4}  {:>3} {:>3} {:>3} {:>3} {:>3} {:>3}  {:<5}  {:>4}  {:>4}\n",
                row.k,
                row.gh_del,
                row.gh_delbar,
                row.gh_bc,
                row.gh_a,
                row.varouchas.a,
                row.varouchas.b,
                row.varouchas.c,
                row.varouchas.d,
                row.varouchas.e,
                row.varouchas.f,
                if row.lemma { "yes" } else { "no" },
                row.e1,
                row.e_inf,
            ));
        }
        if !pages.is_empty() {
            out.push_str("pages:\n");
            for (idx, page) in pages.iter().enumerate() {
                out.push_str(&format!(
                    "  E_{}: {}\n",
                    idx + 1,
                    page.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                ));
            }
        }
        out.push_str(&format!(
            "verdicts: inequality={} equality={} lemma={} degeneration={} decomposition={}\n",
            paint(self.verdicts.inequality),
            paint(self.verdicts.equality),
            paint(self.verdicts.lemma),
            paint(self.verdicts.degeneration),
            paint(self.verdicts.decomposition),
        ));
        match &self.bridge {
            None => {}
            Some(BridgeReport::Symplectic {
                betti,
                ty_bc,
                ty_a,
                ddlambda_lemma,
                bc_geq_betti,
                bc_equals_a,
                equality_iff_lemma,
                intertwining,
            }) => {
                out.push_str("bridge (symplectic):\n");
                let line = |name: &str, v: &[usize]| {
                    format!(
                        "  {name}: {}\n",
                        v.iter()
                            .map(ToString::to_string)
                            .collect::<Vec<_>>()
                            .join(" ")
                    )
                };
                out.push_str(&line("de Rham", betti));
                out.push_str(&line("d-dL Bott-Chern", ty_bc));
                out.push_str(&line("d-dL Aeppli", ty_a));
                out.push_str(&format!(
                    "  ddLambda-lemma={} bc>=betti={} bc=aeppli={} equality-iff-lemma={} \
                     intertwining={}\n",
                    paint(*ddlambda_lemma),
                    paint(*bc_geq_betti),
                    paint(*bc_equals_a),
                    paint(*equality_iff_lemma),
                    paint(*intertwining),
                ));
            }
            Some(BridgeReport::Complex {
                h_delbar,
                h_bc,
                classical_lemma,
                conjugation,
                star_duality,
                sums_match,
                inequality,
                ..
            }) => {
                out.push_str("bridge (complex):\n");
                let table = |name: &str, t: &[Vec<usize>]| {
                    let rows: Vec<String> = t
                        .iter()
                        .map(|r| {
                            r.iter()
                                .map(ToString::to_string)
                                .collect::<Vec<_>>()
                                .join(" ")
                        })
                        .collect();
                    format!("  {name}: [{}]\n", rows.join(" | "))
                };
                out.push_str(&table("hodge delbar", h_delbar));
                out.push_str(&table("hodge Bott-Chern", h_bc));
                out.push_str(&format!(
                    "  classical-lemma={} conjugation={} star-duality={} sums-match={} \
                     inequality={}\n",
                    paint(*classical_lemma),
                    paint(*conjugation),
                    paint(*star_duality),
                    paint(*sums_match),
                    paint(*inequality),
                ));
            }
        }
        out
    }
}
