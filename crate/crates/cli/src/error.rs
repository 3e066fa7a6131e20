use std::fmt;

use arcknot_core::arc::ArcError;
use arcknot_core::diagram::DiagramError;
use arcknot_core::io::InputError;
use arcknot_core::knotting::KnottingError;
use arcknot_core::trace::TraceError;

#[derive(Debug)]
pub enum CliError {
    Input(InputError),
    Diagram(DiagramError),
    Knotting(KnottingError),
    Argument(String),
    Io(String),
}

impl CliError {
    /// Stable identifier printed with every error.
    pub fn kind(&self) -> String {
        match self {
            CliError::Input(e) => match e {
                InputError::Syntax { .. } => "JsonSyntax".into(),
                InputError::Shape { .. } => "ArcShape".into(),
                InputError::Arc(a) => match a {
                    ArcError::TooFewVertices(_) => "TooFewVertices",
                    ArcError::RepeatedVertex { .. } => "RepeatedVertex",
                    ArcError::ClosedPath => "ClosedPath",
                    ArcError::SelfIntersection { .. } => "SelfIntersection",
                    ArcError::CollinearArc => "CollinearArc",
                }
                .into(),
                InputError::Direction(_) => "BadDirection".into(),
            },
            CliError::Diagram(e) => match e {
                DiagramError::NotGeneric(r) => r.kind().map(|k| k.to_string()).unwrap_or_else(|| "NotGeneric".into()),
                DiagramError::Trace(TraceError::CollinearDegenerate) => "CollinearDegenerate".into(),
                DiagramError::Trace(TraceError::OnTraceSet { .. }) => "OnTraceSet".into(),
                DiagramError::BadCode(_) => "BadCode".into(),
            },
            CliError::Knotting(e) => match e {
                KnottingError::GroupTooLarge { .. } => "GroupTooLarge",
                KnottingError::BadGroup(_) => "BadGroup",
                KnottingError::BadTable { .. } => "BadTable",
            }
            .into(),
            CliError::Argument(_) => "BadArgument".into(),
            CliError::Io(_) => "Io".into(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(e) => e.fmt(f),
            CliError::Diagram(e) => e.fmt(f),
            CliError::Knotting(e) => e.fmt(f),
            CliError::Argument(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl From<InputError> for CliError {
    fn from(e: InputError) -> Self {
        CliError::Input(e)
    }
}

impl From<DiagramError> for CliError {
    fn from(e: DiagramError) -> Self {
        CliError::Diagram(e)
    }
}

impl From<TraceError> for CliError {
    fn from(e: TraceError) -> Self {
        CliError::Diagram(DiagramError::Trace(e))
    }
}

impl From<KnottingError> for CliError {
    fn from(e: KnottingError) -> Self {
        CliError::Knotting(e)
    }
}
