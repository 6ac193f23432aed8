use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("unsupported format_version {0}, expected 1")]
    Version(u64),
    #[error("{kind} `{name}` is missing the `{map}` map")]
    MissingMap { kind: String, name: String, map: &'static str },
    #[error("undeclared basis label `{label}` in `{map}`")]
    UndeclaredLabel { label: String, map: String },
    #[error("coefficient `{token}` in `{map}` is not an element of {semiring}")]
    Carrier { token: String, map: String, semiring: String },
    #[error("duplicate entry for `{label}` in `{map}`")]
    Duplicate { label: String, map: String },
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] semihopf::Error),
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        let message = e.to_string();
        // serde_json appends " at line L column C"; keep only the message
        let message = match message.rfind(" at line ") {
            Some(i) => message[..i].to_string(),
            None => message,
        };
        CliError::Parse { line: e.line(), column: e.column(), message }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
