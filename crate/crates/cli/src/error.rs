//! Command-line error type with the exit-code discipline:
//! 2 input/config, 3 training/validation, 4 artifact.

use polarity_core::corpus::CorpusError;
use polarity_core::eval::EvalError;
use polarity_core::features::FeatureError;
use polarity_core::models::ModelError;
use polarity_core::preprocess::PreprocessError;

#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Train(String),
    #[error("{0}")]
    Artifact(String),
}

impl AppError {
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Input(_) => 2,
            AppError::Train(_) => 3,
            AppError::Artifact(_) => 4,
        }
    }

    pub fn input(message: impl Into<String>) -> Self {
        AppError::Input(message.into())
    }

    pub fn train(message: impl Into<String>) -> Self {
        AppError::Train(message.into())
    }

    pub fn artifact(message: impl Into<String>) -> Self {
        AppError::Artifact(message.into())
    }
}

impl From<CorpusError> for AppError {
    fn from(e: CorpusError) -> Self {
        AppError::Input(e.to_string())
    }
}

impl From<PreprocessError> for AppError {
    fn from(e: PreprocessError) -> Self {
        AppError::Input(e.to_string())
    }
}

impl From<FeatureError> for AppError {
    fn from(e: FeatureError) -> Self {
        AppError::Train(e.to_string())
    }
}

impl From<ModelError> for AppError {
    fn from(e: ModelError) -> Self {
        AppError::Train(e.to_string())
    }
}

impl From<EvalError> for AppError {
    fn from(e: EvalError) -> Self {
        AppError::Train(e.to_string())
    }
}
