use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use snc_milnor::jordan::ResolutionGraph;
use snc_milnor::milnor::{ConeSingularityInput, SncLinkInput};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Cone,
    SncLink,
    Jordan,
    RankCheck,
}

impl Mode {
    pub fn key(self) -> &'static str {
        match self {
            Mode::Cone => "cone",
            Mode::SncLink => "snc_link",
            Mode::Jordan => "jordan",
            Mode::RankCheck => "rank_check",
        }
    }

    pub fn schema(self) -> &'static str {
        match self {
            Mode::Cone => include_str!("../../../schemas/cone.schema.json"),
            Mode::SncLink => include_str!("../../../schemas/snc_link.schema.json"),
            Mode::Jordan => include_str!("../../../schemas/jordan.schema.json"),
            Mode::RankCheck => include_str!("../../../schemas/rank_check.schema.json"),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// Reduced Milnor fiber and link cohomology ranks of a germ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RankCheckInput {
    pub n: usize,
    pub h_tilde_f: Vec<u64>,
    pub h_link_phi: Vec<u64>,
    pub k_x: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputDocument {
    Cone(ConeSingularityInput),
    SncLink(SncLinkInput),
    Jordan(ResolutionGraph),
    RankCheck(RankCheckInput),
}

/// Check `value` against the schema of `mode`, listing every violation.
pub fn validate_schema(value: &Value, mode: Mode) -> Result<(), CliError> {
    let schema: Value = serde_json::from_str(mode.schema()).expect("bundled schema is valid JSON");
    let validator = jsonschema::validator_for(&schema).expect("bundled schema compiles");
    let errors: Vec<String> = validator
        .iter_errors(value)
        .map(|e| {
            let path = e.instance_path().to_string();
            let field = if path.is_empty() { "/".to_string() } else { path };
            format!("  {field}: {e}")
        })
        .collect();
    if errors.is_empty() {
        Ok(())
    } else {
        Err(CliError::Usage(format!("input violates the {mode} schema:\n{}", errors.join("\n"))))
    }
}

/// Parse an input file of the given mode. Returns the typed document and
/// an echo of the input with every number turned into a string.
pub fn parse_input(text: &str, mode: Mode) -> Result<(InputDocument, Value), CliError> {
    let value: Value = serde_json::from_str(text).map_err(|e| CliError::Usage(format!("malformed JSON: {e}")))?;
    match value.get("mode").and_then(Value::as_str) {
        Some(m) if m == mode.key() => {}
        Some(m) => {
            return Err(CliError::Usage(format!("input has mode \"{m}\" but the {mode} command was run")));
        }
        None => return Err(CliError::Usage("input needs a string field \"mode\"".into())),
    }
    validate_schema(&value, mode)?;
    let mut body = value.clone();
    body.as_object_mut().expect("schema requires an object").remove("mode");
    let bad = |e: serde_json::Error| CliError::Usage(format!("invalid {mode} input: {e}"));
    let doc = match mode {
        Mode::Cone => InputDocument::Cone(serde_json::from_value(body).map_err(bad)?),
        Mode::SncLink => InputDocument::SncLink(serde_json::from_value(body).map_err(bad)?),
        Mode::Jordan => InputDocument::Jordan(serde_json::from_value(body).map_err(bad)?),
        Mode::RankCheck => InputDocument::RankCheck(serde_json::from_value(body).map_err(bad)?),
    };
    Ok((doc, stringify_numbers(value)))
}

/// Replace every JSON number by its decimal string.
pub fn stringify_numbers(v: Value) -> Value {
    match v {
        Value::Number(n) => Value::String(n.to_string()),
        Value::Array(xs) => Value::Array(xs.into_iter().map(stringify_numbers).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, x)| (k, stringify_numbers(x))).collect()),
        other => other,
    }
}

/// Serialize a typed document back to an input file.
pub fn to_input_json(doc: &InputDocument) -> Value {
    let (mode, mut body) = match doc {
        InputDocument::Cone(c) => (Mode::Cone, serde_json::to_value(c)),
        InputDocument::SncLink(s) => (Mode::SncLink, serde_json::to_value(s)),
        InputDocument::Jordan(g) => (Mode::Jordan, serde_json::to_value(g)),
        InputDocument::RankCheck(r) => (Mode::RankCheck, serde_json::to_value(r)),
    };
    let body = body.as_mut().expect("input types serialize");
    let obj = body.as_object_mut().expect("input types are objects");
    obj.insert("mode".into(), Value::String(mode.key().into()));
    Value::Object(obj.clone())
}
