use thiserror::Error;

/// Errors raised by constructions and checks in this crate.
///
/// Variants carry the identifiers of the offending objects and arrows so a
/// caller can report a concrete witness.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatError {
    #[error("missing identity for object `{object}`")]
    MissingIdentity { object: String },
    #[error("composition is not associative: {h} . ({g} . {f}) != ({h} . {g}) . {f}")]
    NonAssociative { h: String, g: String, f: String },
    #[error("no composition entry for composable pair ({g}, {f})")]
    IncompleteComposition { g: String, f: String },
    #[error("domain/codomain mismatch: {detail}")]
    DomCodMismatch { detail: String },
    #[error("unit law fails for arrow `{arrow}`")]
    UnitLaw { arrow: String },
    #[error("duplicate identifier `{id}`")]
    DuplicateId { id: String },
    #[error("category has {arrows} arrows, more than the supported maximum of {max}")]
    TooLarge { arrows: usize, max: usize },
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("unknown element `{element}` at object `{object}`")]
    UnknownElement { object: String, element: String },
    #[error("not a functor: {detail}")]
    NotFunctorial { detail: String },
    #[error("functors live over different base categories")]
    BaseMismatch,
    #[error("search budget exceeded: {candidates} candidates against a budget of {budget} ({explored:.3} explored)")]
    SearchBudgetExceeded {
        candidates: u128,
        budget: u64,
        explored: f64,
    },
    #[error("index category is not filtered")]
    NotFiltered,
    #[error("functor is not a full embedding: {detail}")]
    NotAnEmbedding { detail: String },
    #[error("presheaf is not flat")]
    FlatnessRequired,
    #[error("single-span relation is not transitive at {detail}")]
    RelationNotTransitive { detail: String },
    #[error("functor is not final at object `{object}`")]
    NotFinal { object: String },
    #[error("tensor product routes disagree: {detail}")]
    CommutationFailure { detail: String },
    #[error("arrow `{arrow}` does not have codomain `{object}`")]
    CodMismatch { arrow: String, object: String },
    #[error("not a Grothendieck topology: {detail}")]
    NotATopology { detail: String },
    #[error("topology is not rigid at object `{object}`")]
    NotRigid { object: String },
    #[error("presheaf is not a sheaf: {detail}")]
    NotASheaf { detail: String },
    #[error("invalid input: {0}")]
    Input(String),
}

impl CatError {
    /// Stable name of the variant, used in machine-readable reports.
    pub fn name(&self) -> &'static str {
        match self {
            CatError::MissingIdentity { .. } => "MissingIdentity",
            CatError::NonAssociative { .. } => "NonAssociative",
            CatError::IncompleteComposition { .. } => "IncompleteComposition",
            CatError::DomCodMismatch { .. } => "DomCodMismatch",
            CatError::UnitLaw { .. } => "UnitLaw",
            CatError::DuplicateId { .. } => "DuplicateId",
            CatError::TooLarge { .. } => "TooLarge",
            CatError::UnknownObject(_) => "UnknownObject",
            CatError::UnknownArrow(_) => "UnknownArrow",
            CatError::UnknownElement { .. } => "UnknownElement",
            CatError::NotFunctorial { .. } => "NotFunctorial",
            CatError::BaseMismatch => "BaseMismatch",
            CatError::SearchBudgetExceeded { .. } => "SearchBudgetExceeded",
            CatError::NotFiltered => "NotFiltered",
            CatError::NotAnEmbedding { .. } => "NotAnEmbedding",
            CatError::FlatnessRequired => "FlatnessRequired",
            CatError::RelationNotTransitive { .. } => "RelationNotTransitive",
            CatError::NotFinal { .. } => "NotFinal",
            CatError::CommutationFailure { .. } => "CommutationFailure",
            CatError::CodMismatch { .. } => "CodMismatch",
            CatError::NotATopology { .. } => "NotATopology",
            CatError::NotRigid { .. } => "NotRigid",
            CatError::NotASheaf { .. } => "NotASheaf",
            CatError::Input(_) => "Input",
        }
    }
}

impl From<serde_json::Error> for CatError {
    fn from(err: serde_json::Error) -> Self {
        CatError::Input(err.to_string())
    }
}

pub type Result<T, E = CatError> = std::result::Result<T, E>;
