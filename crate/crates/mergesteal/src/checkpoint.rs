//! Bit-exact reader/writer for single-file tensor checkpoints.
//!
//! Wire format: bytes 0-7 hold an unsigned 64-bit little-endian header
//! length `N`; bytes `8..8+N` hold a UTF-8 JSON object mapping tensor name to
//! `{"dtype", "shape", "data_offsets": [begin, end]}` plus an optional
//! `"__metadata__"` string map; the raw payload starts at byte `8+N` and
//! offsets are relative to it. Ranges must be contiguous, non-overlapping and
//! in header order. Canonical serialization writes `__metadata__` first and
//! tensor names in lexicographic order, so equal checkpoints always produce
//! identical bytes.
//!
//! Only float dtypes are accepted: merging arithmetic is defined over floats.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use half::{bf16, f16};
use serde::Deserialize;

pub const DEFAULT_MAX_FILE_BYTES: u64 = 16 * 1024 * 1024 * 1024;

/// Errors for checkpoint parsing and serialization. Each variant is a
/// documented rejection class for malformed files.
#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("file too short for the 8-byte header length prefix")]
    FileTooShort,
    #[error("malformed header length: declares {declared} bytes but only {available} follow")]
    HeaderLength { declared: u64, available: u64 },
    #[error("header not valid JSON: {0}")]
    HeaderJson(String),
    #[error("header must be a JSON object")]
    HeaderNotObject,
    #[error("__metadata__ values must be strings")]
    MetadataValueNotString,
    #[error("tensor names must be non-empty")]
    EmptyTensorName,
    #[error("unknown dtype string {0:?}")]
    UnknownDtype(String),
    #[error("tensor {name:?}: shape element product overflows")]
    ShapeOverflow { name: String },
    #[error("tensor {name:?}: {reason} data range [{begin}, {end})")]
    DataRange {
        name: String,
        reason: &'static str,
        begin: u64,
        end: u64,
    },
    #[error("tensor {name:?}: byte-length mismatch, shape/dtype require {expected} bytes but range holds {actual}")]
    ByteLengthMismatch {
        name: String,
        expected: u64,
        actual: u64,
    },
    #[error("payload holds {actual} bytes but tensor ranges cover {covered}")]
    TrailingBytes { actual: u64, covered: u64 },
    #[error("serialized size {size} exceeds the configured maximum of {max} bytes")]
    TooLarge { size: u64, max: u64 },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dtype {
    F32,
    F64,
    F16,
    Bf16,
}

impl Dtype {
    pub fn size(self) -> usize {
        match self {
            Dtype::F32 => 4,
            Dtype::F64 => 8,
            Dtype::F16 | Dtype::Bf16 => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Dtype::F32 => "F32",
            Dtype::F64 => "F64",
            Dtype::F16 => "F16",
            Dtype::Bf16 => "BF16",
        }
    }

    fn parse(token: &str) -> Result<Self, FormatError> {
        match token {
            "F32" => Ok(Dtype::F32),
            "F64" => Ok(Dtype::F64),
            "F16" => Ok(Dtype::F16),
            "BF16" => Ok(Dtype::Bf16),
            other => Err(FormatError::UnknownDtype(other.to_string())),
        }
    }
}

impl fmt::Display for Dtype {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Raw little-endian tensor data plus dtype/shape metadata. The byte length
/// always equals `product(shape) * dtype.size()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor {
    dtype: Dtype,
    shape: Vec<usize>,
    data: Vec<u8>,
}

impl Tensor {
    pub fn new(dtype: Dtype, shape: Vec<usize>, data: Vec<u8>) -> Result<Self, FormatError> {
        let elements = checked_element_count(&shape).ok_or(FormatError::ShapeOverflow {
            name: String::new(),
        })?;
        let expected = elements * dtype.size() as u64;
        if expected != data.len() as u64 {
            return Err(FormatError::ByteLengthMismatch {
                name: String::new(),
                expected,
                actual: data.len() as u64,
            });
        }
        Ok(Self { dtype, shape, data })
    }

    /// Builds a tensor by rounding f64 values into the storage dtype.
    pub fn from_f64s(dtype: Dtype, shape: Vec<usize>, values: &[f64]) -> Result<Self, FormatError> {
        let mut data = Vec::with_capacity(values.len() * dtype.size());
        match dtype {
            Dtype::F32 => {
                for &v in values {
                    data.extend_from_slice(&(v as f32).to_le_bytes());
                }
            }
            Dtype::F64 => {
                for &v in values {
                    data.extend_from_slice(&v.to_le_bytes());
                }
            }
            Dtype::F16 => {
                for &v in values {
                    data.extend_from_slice(&f16::from_f64(v).to_le_bytes());
                }
            }
            Dtype::Bf16 => {
                for &v in values {
                    data.extend_from_slice(&bf16::from_f64(v).to_le_bytes());
                }
            }
        }
        Self::new(dtype, shape, data)
    }

    /// Widens the stored values to f64 for arithmetic.
    pub fn to_f64s(&self) -> Vec<f64> {
        match self.dtype {
            Dtype::F32 => self
                .data
                .chunks_exact(4)
                .map(|c| f32::from_le_bytes([c[0], c[1], c[2], c[3]]) as f64)
                .collect(),
            Dtype::F64 => self
                .data
                .chunks_exact(8)
                .map(|c| f64::from_le_bytes(c.try_into().unwrap()))
                .collect(),
            Dtype::F16 => self
                .data
                .chunks_exact(2)
                .map(|c| f16::from_le_bytes([c[0], c[1]]).to_f64())
                .collect(),
            Dtype::Bf16 => self
                .data
                .chunks_exact(2)
                .map(|c| bf16::from_le_bytes([c[0], c[1]]).to_f64())
                .collect(),
        }
    }

    pub fn dtype(&self) -> Dtype {
        self.dtype
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    pub fn element_count(&self) -> usize {
        self.data.len() / self.dtype.size()
    }
}

fn checked_element_count(shape: &[usize]) -> Option<u64> {
    shape
        .iter()
        .try_fold(1u64, |acc, &dim| acc.checked_mul(dim as u64))
}

/// Named tensor map with free-form string metadata. Tensor names are unique
/// and non-empty; iteration is always in lexicographic name order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Checkpoint {
    tensors: BTreeMap<String, Tensor>,
    pub metadata: BTreeMap<String, String>,
}

impl Checkpoint {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, name: impl Into<String>, tensor: Tensor) -> Result<(), FormatError> {
        let name = name.into();
        if name.is_empty() {
            return Err(FormatError::EmptyTensorName);
        }
        self.tensors.insert(name, tensor);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&Tensor> {
        self.tensors.get(name)
    }

    pub fn tensors(&self) -> impl Iterator<Item = (&str, &Tensor)> {
        self.tensors.iter().map(|(n, t)| (n.as_str(), t))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.tensors.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.tensors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tensors.is_empty()
    }

    /// Canonical header JSON: `__metadata__` first (when non-empty), tensors
    /// in lexicographic order with contiguous offsets.
    pub fn canonical_header(&self) -> Vec<u8> {
        let mut header = serde_json::Map::new();
        if !self.metadata.is_empty() {
            let meta: serde_json::Map<String, serde_json::Value> = self
                .metadata
                .iter()
                .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
                .collect();
            header.insert("__metadata__".into(), serde_json::Value::Object(meta));
        }
        let mut offset = 0u64;
        for (name, tensor) in &self.tensors {
            let len = tensor.data.len() as u64;
            header.insert(
                name.clone(),
                serde_json::json!({
                    "dtype": tensor.dtype.as_str(),
                    "shape": tensor.shape,
                    "data_offsets": [offset, offset + len],
                }),
            );
            offset += len;
        }
        serde_json::to_vec(&serde_json::Value::Object(header)).expect("header serialization")
    }

    /// Full canonical serialization as bytes.
    pub fn to_bytes(&self) -> Vec<u8> {
        let header = self.canonical_header();
        let payload_len: usize = self.tensors.values().map(|t| t.data.len()).sum();
        let mut out = Vec::with_capacity(8 + header.len() + payload_len);
        out.extend_from_slice(&(header.len() as u64).to_le_bytes());
        out.extend_from_slice(&header);
        for tensor in self.tensors.values() {
            out.extend_from_slice(&tensor.data);
        }
        out
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct HeaderEntry {
    dtype: String,
    shape: Vec<u64>,
    data_offsets: [u64; 2],
}

/// Parses checkpoint bytes, enforcing the full wire-format contract.
pub fn parse_checkpoint(bytes: &[u8]) -> Result<Checkpoint, FormatError> {
    if bytes.len() < 8 {
        return Err(FormatError::FileTooShort);
    }
    let declared = u64::from_le_bytes(bytes[..8].try_into().unwrap());
    let available = (bytes.len() - 8) as u64;
    if declared > available {
        return Err(FormatError::HeaderLength { declared, available });
    }
    let header_end = 8 + declared as usize;
    let header: serde_json::Value = serde_json::from_slice(&bytes[8..header_end])
        .map_err(|e| FormatError::HeaderJson(e.to_string()))?;
    let header = header.as_object().ok_or(FormatError::HeaderNotObject)?;
    let payload = &bytes[header_end..];

    let mut ckpt = Checkpoint::new();
    let mut cursor = 0u64;
    for (name, value) in header {
        if name == "__metadata__" {
            let map = value.as_object().ok_or(FormatError::MetadataValueNotString)?;
            for (k, v) in map {
                let s = v.as_str().ok_or(FormatError::MetadataValueNotString)?;
                ckpt.metadata.insert(k.clone(), s.to_string());
            }
            continue;
        }
        if name.is_empty() {
            return Err(FormatError::EmptyTensorName);
        }
        let entry: HeaderEntry = serde_json::from_value(value.clone())
            .map_err(|e| FormatError::HeaderJson(format!("tensor {name:?}: {e}")))?;
        let dtype = Dtype::parse(&entry.dtype)?;
        let [begin, end] = entry.data_offsets;
        if end < begin || end > payload.len() as u64 {
            return Err(FormatError::DataRange {
                name: name.clone(),
                reason: "out-of-bounds",
                begin,
                end,
            });
        }
        if begin != cursor {
            let reason = if begin < cursor { "overlapping" } else { "non-contiguous" };
            return Err(FormatError::DataRange {
                name: name.clone(),
                reason,
                begin,
                end,
            });
        }
        cursor = end;
        let shape: Vec<usize> = entry.shape.iter().map(|&d| d as usize).collect();
        let elements = checked_element_count(&shape)
            .ok_or_else(|| FormatError::ShapeOverflow { name: name.clone() })?;
        let expected = elements * dtype.size() as u64;
        if expected != end - begin {
            return Err(FormatError::ByteLengthMismatch {
                name: name.clone(),
                expected,
                actual: end - begin,
            });
        }
        let data = payload[begin as usize..end as usize].to_vec();
        ckpt.insert(name.clone(), Tensor { dtype, shape, data })?;
    }
    if cursor != payload.len() as u64 {
        return Err(FormatError::TrailingBytes {
            actual: payload.len() as u64,
            covered: cursor,
        });
    }
    Ok(ckpt)
}

/// Reads a checkpoint file. No numeric conversion is performed.
pub fn read_checkpoint(path: &Path) -> Result<Checkpoint, FormatError> {
    parse_checkpoint(&std::fs::read(path)?)
}

/// Writes the canonical serialization, rejecting files beyond `max_bytes`.
pub fn write_checkpoint_with(
    ckpt: &Checkpoint,
    path: &Path,
    max_bytes: u64,
) -> Result<(), FormatError> {
    let bytes = ckpt.to_bytes();
    if bytes.len() as u64 > max_bytes {
        return Err(FormatError::TooLarge {
            size: bytes.len() as u64,
            max: max_bytes,
        });
    }
    std::fs::write(path, bytes)?;
    Ok(())
}

/// Writes with the 16 GiB default size cap.
pub fn write_checkpoint(ckpt: &Checkpoint, path: &Path) -> Result<(), FormatError> {
    write_checkpoint_with(ckpt, path, DEFAULT_MAX_FILE_BYTES)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MismatchReason {
    Missing,
    Shape,
    Dtype,
}

impl fmt::Display for MismatchReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MismatchReason::Missing => "missing",
            MismatchReason::Shape => "shape",
            MismatchReason::Dtype => "dtype",
        })
    }
}

/// Architecture comparison result. `compatible` holds exactly when
/// `mismatches` is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatReport {
    pub mismatches: Vec<(String, MismatchReason)>,
}

impl CompatReport {
    pub fn compatible(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for CompatReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.compatible() {
            return f.write_str("compatible");
        }
        let parts: Vec<String> = self
            .mismatches
            .iter()
            .map(|(name, reason)| format!("{name} ({reason})"))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Lists every tensor present in exactly one checkpoint or differing in
/// shape/dtype. The `compatible` flag is symmetric in its arguments.
pub fn validate_compat(a: &Checkpoint, b: &Checkpoint) -> CompatReport {
    let mut mismatches = Vec::new();
    let names: std::collections::BTreeSet<&str> = a.names().chain(b.names()).collect();
    for name in names {
        match (a.get(name), b.get(name)) {
            (Some(ta), Some(tb)) => {
                if ta.dtype != tb.dtype {
                    mismatches.push((name.to_string(), MismatchReason::Dtype));
                }
                if ta.shape != tb.shape {
                    mismatches.push((name.to_string(), MismatchReason::Shape));
                }
            }
            _ => mismatches.push((name.to_string(), MismatchReason::Missing)),
        }
    }
    CompatReport { mismatches }
}
