//! End-to-end driver: parse, validate, build the structure, compute the
//! cohomology table, the spectral pages and the applicable bridge, then
//! assemble the report.

use crate::bridges::{self, BigradedDims, SymplecticBridge};
use crate::cohomology::{self, CohomologyData};
use crate::gcs::GcsData;
use crate::model::{self, LieModel, StructureSpec};
use crate::report::{BridgeReport, PerK, Report, VarouchasReport, Verdicts};
use crate::spectral::{self, SpectralData};
use crate::{Error, Result};

/// Run options; `max_page` only caps how many pages the text report lists
/// (pages are always computed to stabilization), `oracle` switches the
/// lemma verdict to the full subspace-equality route.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub max_page: usize,
    pub oracle: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_page: 4,
            oracle: false,
        }
    }
}

/// Specialization data for the structure kind of the model, when one
/// applies.
#[derive(Clone, Debug)]
pub enum BridgeData {
    Symplectic(SymplecticBridge),
    Complex(BigradedDims),
}

/// Everything the engine knows about one model.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub name: String,
    pub model: LieModel,
    pub spec: StructureSpec,
    pub gcs: GcsData,
    pub cohomology: CohomologyData,
    pub spectral: SpectralData,
    pub bridge: Option<BridgeData>,
}

/// Full pipeline on model-file text.
pub fn analyze_text(name: &str, text: &str, config: &RunConfig) -> Result<Analysis> {
    if config.max_page == 0 {
        return Err(Error::Structural(
            "max spectral page must be at least 1".into(),
        ));
    }
    let (model, spec) = model::parse_model(text)?;
    analyze(name, model, spec, config)
}

/// Full pipeline on an already-parsed model.
pub fn analyze(
    name: &str,
    model: LieModel,
    spec: StructureSpec,
    config: &RunConfig,
) -> Result<Analysis> {
    model.validate().map_err(Error::Structural)?;
    let gcs = GcsData::build(&model, &spec)?;
    let cohomology = cohomology::compute(&model, &gcs, config.oracle)?;
    let spectral = spectral::compute(&model, &gcs, &cohomology)?;
    let bridge = match &spec {
        StructureSpec::SymplecticForm(omega) => Some(BridgeData::Symplectic(
            bridges::symplectic_bridge(&model, omega, &gcs, &cohomology)?,
        )),
        StructureSpec::ComplexEndomorphism(j) => Some(BridgeData::Complex(
            bridges::dolbeault_bigraded(&model, j, &gcs, &cohomology)?,
        )),
        StructureSpec::PureSpinor(_) | StructureSpec::RawMatrix(_) => None,
    };
    Ok(Analysis {
        name: name.to_string(),
        model,
        spec,
        gcs,
        cohomology,
        spectral,
        bridge,
    })
}

impl Analysis {
    pub fn report(&self) -> Report {
        let per_k = self
            .cohomology
            .slices
            .iter()
            .map(|s| PerK {
                k: s.k,
                gh_del: s.gh_del,
                gh_delbar: s.gh_delbar,
                gh_bc: s.gh_bc,
                gh_a: s.gh_a,
                lemma: s.lemma,
                varouchas: VarouchasReport {
                    a: s.var.a,
                    b: s.var.b,
                    c: s.var.c,
                    d: s.var.d,
                    e: s.var.e,
                    f: s.var.f,
                },
                e1: self.spectral.e1(s.k),
                e_inf: self.spectral.e_infinity(s.k),
            })
            .collect();
        let verdicts = Verdicts {
            inequality: self.cohomology.inequality_all_k,
            equality: self.cohomology.equality_all_k,
            lemma: self.cohomology.lemma_global,
            degeneration: self.spectral.degenerates_at_e1,
            decomposition: self.spectral.decomposition_ok,
        };
        let bridge = match &self.bridge {
            None => None,
            Some(BridgeData::Symplectic(b)) => Some(BridgeReport::Symplectic {
                betti: b.betti.clone(),
                ty_bc: b.ty_bc.clone(),
                ty_a: b.ty_a.clone(),
                ddlambda_lemma: b.dd_lambda_lemma,
                bc_geq_betti: b.bc_geq_betti,
                bc_equals_a: b.bc_equals_a,
                equality_iff_lemma: b.equality_iff_lemma_ok,
                intertwining: b.intertwining_ok,
            }),
            Some(BridgeData::Complex(b)) => Some(BridgeReport::Complex {
                h_del: b.h_del.clone(),
                h_delbar: b.h_delbar.clone(),
                h_bc: b.h_bc.clone(),
                h_a: b.h_a.clone(),
                classical_lemma: b.classical_lemma,
                conjugation: b.conjugation_ok,
                star_duality: b.star_duality_ok,
                sums_match: b.sums_match,
                inequality: b.inequality_ok,
            }),
        };
        Report {
            model: self.name.clone(),
            n: self.cohomology.n,
            per_k,
            verdicts,
            bridge,
        }
    }

    /// Page rows for the text report, capped by the configured display
    /// limit.
    pub fn display_pages(&self, max_page: usize) -> Vec<Vec<usize>> {
        self.spectral.pages.iter().take(max_page).cloned().collect()
    }
}
