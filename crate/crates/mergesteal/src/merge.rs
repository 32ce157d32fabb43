//! Task-vector extraction and checkpoint merging.
//!
//! Both merging algorithms operate on deltas from a shared base checkpoint:
//! a task vector is the element-wise difference `expert - base`, a weighted
//! merge adds the rate-scaled sum of task vectors back onto the base, and
//! spherical interpolation rotates between two flattened task vectors per
//! tensor. All arithmetic accumulates in f64 regardless of storage dtype and
//! results are stored back in the base dtype.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::checkpoint::{validate_compat, Checkpoint, CompatReport, FormatError, Tensor};

#[derive(Debug, thiserror::Error)]
pub enum MergeError {
    #[error("incompatible checkpoints: {0}")]
    Incompatible(CompatReport),
    #[error("task vector was built against base {expected}, got base {found}")]
    FingerprintMismatch { expected: String, found: String },
    #[error("{rates} rates supplied for {vectors} task vectors")]
    RateCountMismatch { rates: usize, vectors: usize },
    #[error("slerp requires exactly 2 mergers, got {0}")]
    SlerpArity(usize),
    #[error("invalid merge spec: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Format(#[from] FormatError),
}

/// SHA-256 of the canonical header, identifying architecture and dtype
/// layout (not payload values).
pub fn fingerprint(ckpt: &Checkpoint) -> String {
    let digest = Sha256::digest(ckpt.canonical_header());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Element-wise difference from a base checkpoint, aligned name-for-name.
#[derive(Debug, Clone)]
pub struct TaskVector {
    deltas: BTreeMap<String, Tensor>,
    base_fingerprint: String,
}

impl TaskVector {
    pub fn deltas(&self) -> impl Iterator<Item = (&str, &Tensor)> {
        self.deltas.iter().map(|(n, t)| (n.as_str(), t))
    }

    pub fn get(&self, name: &str) -> Option<&Tensor> {
        self.deltas.get(name)
    }

    pub fn base_fingerprint(&self) -> &str {
        &self.base_fingerprint
    }
}

/// `expert - base`, computed in f64 and stored in the base dtype.
pub fn task_vector(expert: &Checkpoint, base: &Checkpoint) -> Result<TaskVector, MergeError> {
    let report = validate_compat(expert, base);
    if !report.compatible() {
        return Err(MergeError::Incompatible(report));
    }
    let deltas: Result<BTreeMap<String, Tensor>, FormatError> = base
        .tensors()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(name, base_tensor)| {
            let expert_tensor = expert.get(name).expect("compat checked");
            let delta: Vec<f64> = expert_tensor
                .to_f64s()
                .iter()
                .zip(base_tensor.to_f64s())
                .map(|(e, b)| e - b)
                .collect();
            let tensor =
                Tensor::from_f64s(base_tensor.dtype(), base_tensor.shape().to_vec(), &delta)?;
            Ok((name.to_string(), tensor))
        })
        .collect();
    Ok(TaskVector {
        deltas: deltas?,
        base_fingerprint: fingerprint(base),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MergeMethod {
    TaskArithmetic,
    Slerp,
}

impl MergeMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            MergeMethod::TaskArithmetic => "task_arithmetic",
            MergeMethod::Slerp => "slerp",
        }
    }

    pub fn parse(s: &str) -> Result<Self, MergeError> {
        match s {
            "task_arithmetic" => Ok(MergeMethod::TaskArithmetic),
            "slerp" => Ok(MergeMethod::Slerp),
            other => Err(MergeError::InvalidSpec(format!("unknown method {other:?}"))),
        }
    }
}

impl fmt::Display for MergeMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Attacker,
    Victim,
    Benign,
}

/// Method plus per-merger rates, with optional merger roles. The ratio
/// `tau = lambda_vic / lambda_att` is derived when exactly one merger is
/// tagged attacker and one victim.
#[derive(Debug, Clone)]
pub struct MergeSpec {
    pub method: MergeMethod,
    pub rates: Vec<f64>,
    pub roles: Vec<Option<Role>>,
}

impl MergeSpec {
    pub fn new(method: MergeMethod, rates: Vec<f64>) -> Self {
        let roles = vec![None; rates.len()];
        Self { method, rates, roles }
    }

    pub fn with_roles(mut self, roles: Vec<Option<Role>>) -> Self {
        self.roles = roles;
        self
    }

    pub fn validate(&self) -> Result<(), MergeError> {
        if self.roles.len() != self.rates.len() {
            return Err(MergeError::InvalidSpec(format!(
                "{} roles for {} rates",
                self.roles.len(),
                self.rates.len()
            )));
        }
        if self.rates.iter().any(|r| !r.is_finite()) {
            return Err(MergeError::InvalidSpec("rates must be finite".into()));
        }
        if self.method == MergeMethod::Slerp {
            if self.rates.len() != 2 {
                return Err(MergeError::SlerpArity(self.rates.len()));
            }
            if self.rates.iter().any(|&r| !(0.0..=1.0).contains(&r)) {
                return Err(MergeError::InvalidSpec(
                    "slerp rates must lie in [0, 1]".into(),
                ));
            }
            if (self.rates.iter().sum::<f64>() - 1.0).abs() > 1e-9 {
                return Err(MergeError::InvalidSpec("slerp rates must sum to 1".into()));
            }
        }
        Ok(())
    }

    fn rate_for(&self, role: Role) -> Option<f64> {
        let mut rates = self
            .roles
            .iter()
            .zip(&self.rates)
            .filter(|(r, _)| **r == Some(role))
            .map(|(_, &rate)| rate);
        let first = rates.next()?;
        if rates.next().is_some() {
            return None;
        }
        Some(first)
    }

    /// `lambda_vic / lambda_att` when the tagging is unambiguous.
    pub fn tau(&self) -> Option<f64> {
        let att = self.rate_for(Role::Attacker)?;
        let vic = self.rate_for(Role::Victim)?;
        (att != 0.0).then(|| vic / att)
    }

    /// Interpolation parameter for slerp: the attacker's rate when tagged,
    /// otherwise the second merger's rate.
    pub fn slerp_t(&self) -> f64 {
        self.rate_for(Role::Attacker).unwrap_or_else(|| self.rates[1])
    }
}

/// `out = base + sum_i rate_i * tv_i`, f64 accumulation, stored in the base
/// dtype. Rates are not constrained to sum to 1; a warning is logged when
/// they drift more than 0.05 from it.
pub fn merge_task_arithmetic(
    base: &Checkpoint,
    tvs: &[TaskVector],
    spec: &MergeSpec,
) -> Result<Checkpoint, MergeError> {
    if spec.rates.len() != tvs.len() {
        return Err(MergeError::RateCountMismatch {
            rates: spec.rates.len(),
            vectors: tvs.len(),
        });
    }
    spec.validate()?;
    let base_fp = fingerprint(base);
    for tv in tvs {
        if tv.base_fingerprint != base_fp {
            return Err(MergeError::FingerprintMismatch {
                expected: tv.base_fingerprint.clone(),
                found: base_fp.clone(),
            });
        }
    }
    let rate_sum: f64 = spec.rates.iter().sum();
    if (rate_sum - 1.0).abs() > 0.05 {
        log::warn!("merging rates sum to {rate_sum:.4}, expected close to 1");
    }

    let merged: Result<BTreeMap<String, Tensor>, FormatError> = base
        .tensors()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(name, base_tensor)| {
            let mut acc = base_tensor.to_f64s();
            for (tv, &rate) in tvs.iter().zip(&spec.rates) {
                // A zero rate contributes nothing; skipping it keeps
                // identity cells bit-clean.
                if rate == 0.0 {
                    continue;
                }
                let delta = tv.get(name).expect("fingerprint checked").to_f64s();
                for (a, d) in acc.iter_mut().zip(delta) {
                    *a += rate * d;
                }
            }
            let tensor =
                Tensor::from_f64s(base_tensor.dtype(), base_tensor.shape().to_vec(), &acc)?;
            Ok((name.to_string(), tensor))
        })
        .collect();
    let mut out = Checkpoint::new();
    for (name, tensor) in merged? {
        out.insert(name, tensor)?;
    }
    Ok(out)
}

const SLERP_MIN_NORM: f64 = 1e-12;
const SLERP_MIN_SIN: f64 = 1e-6;

fn slerp_tensor(a: &[f64], b: &[f64], base: &[f64], t: f64) -> Vec<f64> {
    let u: Vec<f64> = a.iter().zip(base).map(|(x, c)| x - c).collect();
    let v: Vec<f64> = b.iter().zip(base).map(|(x, c)| x - c).collect();
    let dot: f64 = u.iter().zip(&v).map(|(x, y)| x * y).sum();
    let norm_u = u.iter().map(|x| x * x).sum::<f64>().sqrt();
    let norm_v = v.iter().map(|x| x * x).sum::<f64>().sqrt();

    let (cu, cv) = if norm_u < SLERP_MIN_NORM || norm_v < SLERP_MIN_NORM {
        (1.0 - t, t)
    } else {
        let omega = (dot / (norm_u * norm_v)).clamp(-1.0, 1.0).acos();
        let sin_omega = omega.sin();
        if sin_omega < SLERP_MIN_SIN {
            // Parallel or anti-parallel deltas: fall back to linear
            // interpolation.
            (1.0 - t, t)
        } else {
            (
                (((1.0 - t) * omega).sin()) / sin_omega,
                ((t * omega).sin()) / sin_omega,
            )
        }
    };
    base.iter()
        .zip(u.iter().zip(&v))
        .map(|(c, (x, y))| c + cu * x + cv * y)
        .collect()
}

/// Spherical linear interpolation between two experts' task vectors, applied
/// per tensor on the flattened deltas. `t = 0` returns `a`, `t = 1` returns
/// `b`; degenerate angles fall back to linear interpolation.
pub fn merge_slerp(
    a: &Checkpoint,
    b: &Checkpoint,
    t: f64,
    base: &Checkpoint,
) -> Result<Checkpoint, MergeError> {
    for (x, y) in [(a, b), (a, base), (b, base)] {
        let report = validate_compat(x, y);
        if !report.compatible() {
            return Err(MergeError::Incompatible(report));
        }
    }
    // Exact endpoints.
    if t == 0.0 {
        return Ok(a.clone());
    }
    if t == 1.0 {
        return Ok(b.clone());
    }

    let merged: Result<BTreeMap<String, Tensor>, FormatError> = base
        .tensors()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(name, base_tensor)| {
            let av = a.get(name).expect("compat checked").to_f64s();
            let bv = b.get(name).expect("compat checked").to_f64s();
            let cv = base_tensor.to_f64s();
            let out = slerp_tensor(&av, &bv, &cv, t);
            let tensor =
                Tensor::from_f64s(base_tensor.dtype(), base_tensor.shape().to_vec(), &out)?;
            Ok((name.to_string(), tensor))
        })
        .collect();
    let mut out = Checkpoint::new();
    for (name, tensor) in merged? {
        out.insert(name, tensor)?;
    }
    Ok(out)
}

/// Dispatches to the requested algorithm and records the merge settings in
/// the output metadata: method, rates, tau and input fingerprints.
pub fn merge(
    base: &Checkpoint,
    experts: &[Checkpoint],
    spec: &MergeSpec,
) -> Result<Checkpoint, MergeError> {
    spec.validate()?;
    if spec.rates.len() != experts.len() {
        return Err(MergeError::RateCountMismatch {
            rates: spec.rates.len(),
            vectors: experts.len(),
        });
    }
    let mut merged = match spec.method {
        MergeMethod::TaskArithmetic => {
            let tvs: Vec<TaskVector> = experts
                .iter()
                .map(|expert| task_vector(expert, base))
                .collect::<Result<_, _>>()?;
            merge_task_arithmetic(base, &tvs, spec)?
        }
        MergeMethod::Slerp => {
            if experts.len() != 2 {
                return Err(MergeError::SlerpArity(experts.len()));
            }
            merge_slerp(&experts[0], &experts[1], spec.slerp_t(), base)?
        }
    };

    let rates: Vec<String> = spec.rates.iter().map(|r| r.to_string()).collect();
    merged.metadata.insert("merge.method".into(), spec.method.to_string());
    merged.metadata.insert("merge.rates".into(), rates.join(","));
    if let Some(tau) = spec.tau() {
        merged.metadata.insert("merge.tau".into(), tau.to_string());
    }
    merged
        .metadata
        .insert("merge.base_fingerprint".into(), fingerprint(base));
    let expert_fps: Vec<String> = experts.iter().map(fingerprint).collect();
    merged
        .metadata
        .insert("merge.expert_fingerprints".into(), expert_fps.join(","));
    Ok(merged)
}

/// On-disk merge request: `{"method", "base", "experts": [{"path", "rate",
/// "role"}], "output"}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MergeSpecFile {
    pub method: MergeMethod,
    pub base: PathBuf,
    pub experts: Vec<ExpertEntry>,
    pub output: PathBuf,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpertEntry {
    pub path: PathBuf,
    pub rate: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub role: Option<Role>,
}

impl MergeSpecFile {
    pub fn load(path: &std::path::Path) -> Result<Self, MergeError> {
        let text = std::fs::read_to_string(path).map_err(FormatError::Io)?;
        serde_json::from_str(&text).map_err(|e| MergeError::InvalidSpec(e.to_string()))
    }

    pub fn to_spec(&self) -> MergeSpec {
        MergeSpec {
            method: self.method,
            rates: self.experts.iter().map(|e| e.rate).collect(),
            roles: self.experts.iter().map(|e| e.role).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checkpoint::Dtype;

    fn single(name: &str, dtype: Dtype, values: &[f64]) -> Checkpoint {
        let mut ckpt = Checkpoint::new();
        ckpt.insert(name, Tensor::from_f64s(dtype, vec![values.len()], values).unwrap())
            .unwrap();
        ckpt
    }

    #[test]
    fn identical_checkpoints_give_zero_deltas() {
        let base = single("w", Dtype::F32, &[1.5, -2.25, 0.0]);
        let tv = task_vector(&base, &base).unwrap();
        assert_eq!(tv.get("w").unwrap().to_f64s(), vec![0.0, 0.0, 0.0]);
    }

    #[test]
    fn deltas_are_elementwise_differences() {
        let base = single("w", Dtype::F32, &[1.0, 2.0]);
        let expert = single("w", Dtype::F32, &[3.0, 2.0]);
        let tv = task_vector(&expert, &base).unwrap();
        assert_eq!(tv.get("w").unwrap().to_f64s(), vec![2.0, 0.0]);
    }

    // Frozen f16 oracle produced by an independent elementwise script
    // (float16 widened to f64, subtracted, rounded back to float16).
    #[test]
    fn f16_deltas_match_external_oracle() {
        let base_bits: [u16; 6] = [0xbec7, 0x3c7b, 0xb3e2, 0x3b27, 0x3fa6, 0x30ed];
        let expert_bits: [u16; 6] = [0x1c97, 0xbed9, 0xbb69, 0x8fb3, 0x39bc, 0x3cdc];
        let delta_bits: [u16; 6] = [0x3ecc, 0xc1aa, 0xb970, 0xbb28, 0xbcc8, 0x3c3e];
        let to_ckpt = |bits: &[u16; 6]| {
            let data: Vec<u8> = bits.iter().flat_map(|b| b.to_le_bytes()).collect();
            let mut ckpt = Checkpoint::new();
            ckpt.insert("w", Tensor::new(Dtype::F16, vec![6], data).unwrap()).unwrap();
            ckpt
        };
        let tv = task_vector(&to_ckpt(&expert_bits), &to_ckpt(&base_bits)).unwrap();
        let expected: Vec<u8> = delta_bits.iter().flat_map(|b| b.to_le_bytes()).collect();
        assert_eq!(tv.get("w").unwrap().data(), expected.as_slice());
    }

    #[test]
    fn incompatible_checkpoints_are_rejected() {
        let base = single("w", Dtype::F32, &[1.0, 2.0]);
        let expert = single("w", Dtype::F32, &[1.0, 2.0, 3.0]);
        assert!(matches!(task_vector(&expert, &base), Err(MergeError::Incompatible(_))));
    }

    #[test]
    fn unit_rate_reproduces_expert() {
        let base = single("w", Dtype::F32, &[0.125, -3.5, 7.75]);
        let expert = single("w", Dtype::F32, &[9.0, 0.5, -1.25]);
        let tv = task_vector(&expert, &base).unwrap();
        let spec = MergeSpec::new(MergeMethod::TaskArithmetic, vec![1.0]);
        let merged = merge_task_arithmetic(&base, &[tv], &spec).unwrap();
        assert_eq!(merged.get("w").unwrap().data(), expert.get("w").unwrap().data());
    }

    #[test]
    fn weighted_sum_matches_hand_computation() {
        // base [1,2], deltas [2,0] and [0,4], rates 0.8/0.2 -> [2.6, 2.8]
        let base = single("w", Dtype::F64, &[1.0, 2.0]);
        let e1 = single("w", Dtype::F64, &[3.0, 2.0]);
        let e2 = single("w", Dtype::F64, &[1.0, 6.0]);
        let tvs = vec![task_vector(&e1, &base).unwrap(), task_vector(&e2, &base).unwrap()];
        let spec = MergeSpec::new(MergeMethod::TaskArithmetic, vec![0.8, 0.2]);
        let merged = merge_task_arithmetic(&base, &tvs, &spec).unwrap();
        let values = merged.get("w").unwrap().to_f64s();
        assert!((values[0] - 2.6).abs() < 1e-12);
        assert!((values[1] - 2.8).abs() < 1e-12);
    }

    #[test]
    fn zero_rates_return_base_bit_exactly() {
        let base = single("w", Dtype::F32, &[0.1, 0.2, 0.3]);
        let expert = single("w", Dtype::F32, &[5.0, 6.0, 7.0]);
        let tv = task_vector(&expert, &base).unwrap();
        let spec = MergeSpec::new(MergeMethod::TaskArithmetic, vec![0.0]);
        let merged = merge_task_arithmetic(&base, &[tv], &spec).unwrap();
        assert_eq!(merged.get("w").unwrap().data(), base.get("w").unwrap().data());
    }

    #[test]
    fn fingerprint_and_rate_count_are_enforced() {
        let base = single("w", Dtype::F32, &[1.0]);
        let other = single("w", Dtype::F64, &[1.0]);
        let expert = single("w", Dtype::F32, &[2.0]);
        let tv = task_vector(&expert, &base).unwrap();

        let spec = MergeSpec::new(MergeMethod::TaskArithmetic, vec![1.0]);
        assert!(matches!(
            merge_task_arithmetic(&other, &[tv.clone()], &spec),
            Err(MergeError::FingerprintMismatch { .. })
        ));

        let spec = MergeSpec::new(MergeMethod::TaskArithmetic, vec![1.0, 0.5]);
        assert!(matches!(
            merge_task_arithmetic(&base, &[tv], &spec),
            Err(MergeError::RateCountMismatch { rates: 2, vectors: 1 })
        ));
    }

    #[test]
    fn slerp_endpoints_are_exact() {
        let base = single("w", Dtype::F32, &[0.0, 0.0]);
        let a = single("w", Dtype::F32, &[1.0, 0.25]);
        let b = single("w", Dtype::F32, &[-0.5, 2.0]);
        let at0 = merge_slerp(&a, &b, 0.0, &base).unwrap();
        let at1 = merge_slerp(&a, &b, 1.0, &base).unwrap();
        assert_eq!(at0.get("w").unwrap().data(), a.get("w").unwrap().data());
        assert_eq!(at1.get("w").unwrap().data(), b.get("w").unwrap().data());
    }

    #[test]
    fn slerp_orthogonal_midpoint() {
        let base = single("w", Dtype::F64, &[0.0, 0.0]);
        let a = single("w", Dtype::F64, &[1.0, 0.0]);
        let b = single("w", Dtype::F64, &[0.0, 1.0]);
        let mid = merge_slerp(&a, &b, 0.5, &base).unwrap();
        let values = mid.get("w").unwrap().to_f64s();
        let expected = std::f64::consts::FRAC_1_SQRT_2;
        assert!((values[0] - expected).abs() < 1e-12);
        assert!((values[1] - expected).abs() < 1e-12);
    }

    #[test]
    fn slerp_equal_deltas_take_lerp_fallback() {
        let base = single("w", Dtype::F64, &[1.0, -1.0]);
        let a = single("w", Dtype::F64, &[2.0, 1.0]);
        for t in [0.0, 0.25, 0.5, 0.75, 1.0] {
            let merged = merge_slerp(&a, &a, t, &base).unwrap();
            assert_eq!(merged.get("w").unwrap().to_f64s(), a.get("w").unwrap().to_f64s());
        }
    }

    #[test]
    fn slerp_antiparallel_takes_lerp_fallback() {
        let base = single("w", Dtype::F64, &[0.0, 0.0]);
        let a = single("w", Dtype::F64, &[1.0, 0.0]);
        let b = single("w", Dtype::F64, &[-1.0, 0.0]);
        let mid = merge_slerp(&a, &b, 0.5, &base).unwrap();
        assert_eq!(mid.get("w").unwrap().to_f64s(), vec![0.0, 0.0]);
    }

    #[test]
    fn dispatch_matches_methods_and_records_metadata() {
        let base = single("w", Dtype::F64, &[1.0, 2.0]);
        let victim = single("w", Dtype::F64, &[3.0, 2.0]);
        let attacker = single("w", Dtype::F64, &[1.0, 6.0]);
        let experts = vec![victim.clone(), attacker.clone()];

        let spec = MergeSpec::new(MergeMethod::TaskArithmetic, vec![0.8, 0.2])
            .with_roles(vec![Some(Role::Victim), Some(Role::Attacker)]);
        let merged = merge(&base, &experts, &spec).unwrap();
        let tvs = vec![
            task_vector(&victim, &base).unwrap(),
            task_vector(&attacker, &base).unwrap(),
        ];
        let direct = merge_task_arithmetic(&base, &tvs, &spec).unwrap();
        assert_eq!(merged.get("w").unwrap().data(), direct.get("w").unwrap().data());
        assert_eq!(merged.metadata.get("merge.tau").map(String::as_str), Some("4"));
        assert_eq!(
            merged.metadata.get("merge.method").map(String::as_str),
            Some("task_arithmetic")
        );

        let spec = MergeSpec::new(MergeMethod::Slerp, vec![0.8, 0.2]);
        let merged = merge(&base, &experts, &spec).unwrap();
        let direct = merge_slerp(&victim, &attacker, 0.2, &base).unwrap();
        assert_eq!(merged.get("w").unwrap().data(), direct.get("w").unwrap().data());
    }

    #[test]
    fn three_mergers_supported_under_task_arithmetic_only() {
        let base = single("w", Dtype::F64, &[0.0]);
        let experts = vec![
            single("w", Dtype::F64, &[1.0]),
            single("w", Dtype::F64, &[2.0]),
            single("w", Dtype::F64, &[3.0]),
        ];
        let spec = MergeSpec::new(MergeMethod::TaskArithmetic, vec![0.1, 0.8, 0.1]);
        let merged = merge(&base, &experts, &spec).unwrap();
        assert!((merged.get("w").unwrap().to_f64s()[0] - 2.0).abs() < 1e-12);

        let spec = MergeSpec::new(MergeMethod::Slerp, vec![0.1, 0.8, 0.1]);
        assert!(matches!(merge(&base, &experts, &spec), Err(MergeError::SlerpArity(3))));
    }

    #[test]
    fn merging_is_independent_of_insertion_order() {
        let mut base_a = Checkpoint::new();
        base_a.insert("a", Tensor::from_f64s(Dtype::F64, vec![1], &[1.0]).unwrap()).unwrap();
        base_a.insert("b", Tensor::from_f64s(Dtype::F64, vec![1], &[2.0]).unwrap()).unwrap();
        let mut base_b = Checkpoint::new();
        base_b.insert("b", Tensor::from_f64s(Dtype::F64, vec![1], &[2.0]).unwrap()).unwrap();
        base_b.insert("a", Tensor::from_f64s(Dtype::F64, vec![1], &[1.0]).unwrap()).unwrap();
        assert_eq!(fingerprint(&base_a), fingerprint(&base_b));

        let mut expert = Checkpoint::new();
        expert.insert("b", Tensor::from_f64s(Dtype::F64, vec![1], &[5.0]).unwrap()).unwrap();
        expert.insert("a", Tensor::from_f64s(Dtype::F64, vec![1], &[4.0]).unwrap()).unwrap();
        let spec = MergeSpec::new(MergeMethod::TaskArithmetic, vec![0.5]);
        let m1 = merge(&base_a, std::slice::from_ref(&expert), &spec).unwrap();
        let m2 = merge(&base_b, std::slice::from_ref(&expert), &spec).unwrap();
        assert_eq!(m1.to_bytes(), m2.to_bytes());
    }
}
