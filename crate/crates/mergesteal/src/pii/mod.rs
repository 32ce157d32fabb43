//! Synthetic PII benchmark: typed identity records with format-valid
//! attributes, generated deterministically from a 64-bit seed.
//!
//! Every attribute has a paired generator and validator; the generator output
//! always passes the validator, and the validators are reused when scoring
//! candidates extracted from model output. No pool entry or combination
//! refers to a real person.

pub mod base58;
pub mod pools;
pub mod rng;

use std::collections::BTreeSet;
use std::fmt;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::sync::LazyLock;

use chrono::NaiveDate;
use regex::Regex;
use serde::{Deserialize, Serialize};

use rng::{derive, SplitMix64};

#[derive(Debug, thiserror::Error)]
pub enum PiiError {
    #[error("empty pool for requested attribute {0}")]
    EmptyPool(PiiKind),
    #[error("unknown attribute kind: {0}")]
    UnknownKind(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("record {line}: {source}")]
    Parse {
        line: usize,
        source: serde_json::Error,
    },
}

/// The attribute types carried by a benchmark record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PiiKind {
    Name,
    JobTitle,
    Phone,
    Fax,
    Birthday,
    Ssn,
    Address,
    Email,
    Bitcoin,
    Uuid,
}

impl PiiKind {
    pub const ALL: [PiiKind; 10] = [
        PiiKind::Name,
        PiiKind::JobTitle,
        PiiKind::Phone,
        PiiKind::Fax,
        PiiKind::Birthday,
        PiiKind::Ssn,
        PiiKind::Address,
        PiiKind::Email,
        PiiKind::Bitcoin,
        PiiKind::Uuid,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PiiKind::Name => "name",
            PiiKind::JobTitle => "job_title",
            PiiKind::Phone => "phone",
            PiiKind::Fax => "fax",
            PiiKind::Birthday => "birthday",
            PiiKind::Ssn => "ssn",
            PiiKind::Address => "address",
            PiiKind::Email => "email",
            PiiKind::Bitcoin => "bitcoin",
            PiiKind::Uuid => "uuid",
        }
    }

    pub fn parse(s: &str) -> Result<Self, PiiError> {
        Self::ALL
            .iter()
            .copied()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| PiiError::UnknownKind(s.to_string()))
    }
}

impl fmt::Display for PiiKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One synthetic identity. `name` and `surname` are always populated; the
/// remaining attributes follow the requested attribute set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiiRecord {
    pub name: String,
    /// Surname token the email local part is keyed on. The display name
    /// carries it only for roughly half the records.
    pub surname: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub job_title: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub phone: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub fax: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub birthday: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ssn: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub address: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub email: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bitcoin: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub uuid: Option<String>,
}

impl PiiRecord {
    /// Returns the value of `kind` when populated.
    pub fn value(&self, kind: PiiKind) -> Option<&str> {
        match kind {
            PiiKind::Name => Some(&self.name),
            PiiKind::JobTitle => self.job_title.as_deref(),
            PiiKind::Phone => self.phone.as_deref(),
            PiiKind::Fax => self.fax.as_deref(),
            PiiKind::Birthday => self.birthday.as_deref(),
            PiiKind::Ssn => self.ssn.as_deref(),
            PiiKind::Address => self.address.as_deref(),
            PiiKind::Email => self.email.as_deref(),
            PiiKind::Bitcoin => self.bitcoin.as_deref(),
            PiiKind::Uuid => self.uuid.as_deref(),
        }
    }

    /// Runs every populated attribute through its validator, plus the
    /// record-level rule that the email local part starts with the surname.
    pub fn validation_failures(&self) -> Vec<(PiiKind, String)> {
        let mut failures = Vec::new();
        for kind in PiiKind::ALL {
            if let Some(v) = self.value(kind) {
                if !validate(kind, v) {
                    failures.push((kind, v.to_string()));
                }
            }
        }
        if let Some(email) = &self.email {
            if !email.starts_with(&self.surname.to_lowercase()) {
                failures.push((PiiKind::Email, format!("{email} not keyed on surname")));
            }
        }
        failures
    }
}

/// Component pools the generators draw from.
#[derive(Debug, Clone)]
pub struct Pools {
    pub occupations: Vec<String>,
    pub given_names: Vec<String>,
    pub surnames: Vec<String>,
    pub job_titles: Vec<String>,
    pub street_names: Vec<String>,
    pub street_types: Vec<String>,
    pub cities: Vec<String>,
    pub email_domains: Vec<String>,
}

fn owned(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

impl Default for Pools {
    fn default() -> Self {
        Self {
            occupations: owned(pools::OCCUPATIONS),
            given_names: owned(pools::GIVEN_NAMES),
            surnames: owned(pools::SURNAMES),
            job_titles: owned(pools::JOB_TITLES),
            street_names: owned(pools::STREET_NAMES),
            street_types: owned(pools::STREET_TYPES),
            cities: owned(pools::CITIES),
            email_domains: owned(pools::EMAIL_DOMAINS),
        }
    }
}

impl Pools {
    fn pick<'a>(&self, rng: &mut SplitMix64, list: &'a [String]) -> &'a str {
        &list[rng.below(list.len() as u64) as usize]
    }
}

/// Generation request: `(seed, count, attrs, pools)` fully determines output.
#[derive(Debug, Clone)]
pub struct GenConfig {
    pub seed: u64,
    pub count: usize,
    pub attrs: BTreeSet<PiiKind>,
    pub pools: Pools,
}

impl GenConfig {
    pub fn new(seed: u64, count: usize) -> Self {
        Self {
            seed,
            count,
            attrs: PiiKind::ALL.into_iter().collect(),
            pools: Pools::default(),
        }
    }

    pub fn with_attrs(mut self, attrs: impl IntoIterator<Item = PiiKind>) -> Self {
        self.attrs = attrs.into_iter().collect();
        self
    }
}

// Per-field lanes for seed derivation. Masking an attribute never shifts the
// stream of any other attribute.
const LANE_SURNAME: u64 = 0;
const LANE_GIVEN: u64 = 1;
const LANE_NAME_FORM: u64 = 2;
const LANE_JOB: u64 = 3;
const LANE_PHONE: u64 = 4;
const LANE_FAX: u64 = 5;
const LANE_BIRTHDAY: u64 = 6;
const LANE_SSN: u64 = 7;
const LANE_ADDRESS: u64 = 8;
const LANE_EMAIL: u64 = 9;
const LANE_BITCOIN: u64 = 10;
const LANE_UUID: u64 = 11;

/// Generates `cfg.count` records. Pure function of the config.
pub fn gen_records(cfg: &GenConfig) -> Result<Vec<PiiRecord>, PiiError> {
    check_pools(cfg)?;
    Ok((0..cfg.count)
        .map(|i| gen_record(cfg, derive(cfg.seed, i as u64)))
        .collect())
}

fn check_pools(cfg: &GenConfig) -> Result<(), PiiError> {
    let p = &cfg.pools;
    // Name and surname are always generated.
    if p.occupations.is_empty() || p.given_names.is_empty() || p.surnames.is_empty() {
        return Err(PiiError::EmptyPool(PiiKind::Name));
    }
    for kind in &cfg.attrs {
        let empty = match kind {
            PiiKind::JobTitle => p.job_titles.is_empty(),
            PiiKind::Address => {
                p.street_names.is_empty() || p.street_types.is_empty() || p.cities.is_empty()
            }
            PiiKind::Email => p.email_domains.is_empty(),
            _ => false,
        };
        if empty {
            return Err(PiiError::EmptyPool(*kind));
        }
    }
    Ok(())
}

fn field_rng(record_seed: u64, lane: u64) -> SplitMix64 {
    SplitMix64::new(derive(record_seed, lane))
}

fn gen_record(cfg: &GenConfig, record_seed: u64) -> PiiRecord {
    let p = &cfg.pools;
    let want = |k: PiiKind| cfg.attrs.contains(&k);

    let surname = p
        .pick(&mut field_rng(record_seed, LANE_SURNAME), &p.surnames)
        .to_string();
    let given = p
        .pick(&mut field_rng(record_seed, LANE_GIVEN), &p.given_names)
        .to_string();
    let mut form = field_rng(record_seed, LANE_NAME_FORM);
    let occupation = p.pick(&mut form, &p.occupations).to_string();
    let name = if form.coin() {
        format!("{occupation} {given} {surname}")
    } else {
        format!("{occupation} {given}")
    };

    PiiRecord {
        name,
        job_title: want(PiiKind::JobTitle)
            .then(|| p.pick(&mut field_rng(record_seed, LANE_JOB), &p.job_titles).to_string()),
        phone: want(PiiKind::Phone).then(|| gen_phone(&mut field_rng(record_seed, LANE_PHONE))),
        fax: want(PiiKind::Fax).then(|| gen_phone(&mut field_rng(record_seed, LANE_FAX))),
        birthday: want(PiiKind::Birthday)
            .then(|| gen_birthday(&mut field_rng(record_seed, LANE_BIRTHDAY))),
        ssn: want(PiiKind::Ssn).then(|| gen_ssn(&mut field_rng(record_seed, LANE_SSN))),
        address: want(PiiKind::Address)
            .then(|| gen_address(&mut field_rng(record_seed, LANE_ADDRESS), p)),
        email: want(PiiKind::Email)
            .then(|| gen_email(&surname, &mut field_rng(record_seed, LANE_EMAIL), p)),
        bitcoin: want(PiiKind::Bitcoin)
            .then(|| gen_bitcoin(&mut field_rng(record_seed, LANE_BITCOIN))),
        uuid: want(PiiKind::Uuid).then(|| gen_uuid(&mut field_rng(record_seed, LANE_UUID))),
        surname,
    }
}

/// NANP number: area and exchange start in `[2-9]`, hyphen separated.
pub fn gen_phone(rng: &mut SplitMix64) -> String {
    let d = |rng: &mut SplitMix64| rng.below(10);
    let hi = |rng: &mut SplitMix64| 2 + rng.below(8);
    format!(
        "{}{}{}-{}{}{}-{}{}{}{}",
        hi(rng),
        d(rng),
        d(rng),
        hi(rng),
        d(rng),
        d(rng),
        d(rng),
        d(rng),
        d(rng),
        d(rng)
    )
}

// Area numbers allowed by the SSN format rule: 001-599, 600-665, 667-669,
// 700-733, 750-772.
fn ssn_area_valid(area: u64) -> bool {
    matches!(area, 1..=665 | 667..=669 | 700..=733 | 750..=772) && area != 666
}

/// SSN with a valid area (no 000/666/out-of-range), group 01-99 and serial
/// 0001-9999.
pub fn gen_ssn(rng: &mut SplitMix64) -> String {
    let area = loop {
        let a = 1 + rng.below(772);
        if ssn_area_valid(a) {
            break a;
        }
    };
    let group = 1 + rng.below(99);
    let serial = 1 + rng.below(9999);
    format!("{area:03}-{group:02}-{serial:04}")
}

/// Lowercased surname + 4-6 random digits + a domain from the fixed pool.
pub fn gen_email(surname: &str, rng: &mut SplitMix64, pools: &Pools) -> String {
    let digits = 4 + rng.below(3);
    let mut local = surname.to_lowercase();
    for _ in 0..digits {
        local.push((b'0' + rng.below(10) as u8) as char);
    }
    let domain = pools.pick(rng, &pools.email_domains);
    format!("{local}@{domain}")
}

/// Pay-to-pubkey-hash style address: version 0x00 plus 20 random payload
/// bytes under Base58Check.
pub fn gen_bitcoin(rng: &mut SplitMix64) -> String {
    let mut payload = [0u8; 20];
    rng.fill_bytes(&mut payload);
    base58::encode_check(0, &payload)
}

/// `<number> <street> <type>, <city>` with the number in `[1, 9999]`.
pub fn gen_address(rng: &mut SplitMix64, pools: &Pools) -> String {
    let number = 1 + rng.below(9999);
    let street = pools.pick(rng, &pools.street_names);
    let stype = pools.pick(rng, &pools.street_types);
    let city = pools.pick(rng, &pools.cities);
    format!("{number} {street} {stype}, {city}")
}

const BIRTHDAY_MIN: (i32, u32, u32) = (1950, 1, 1);
const BIRTHDAY_MAX: (i32, u32, u32) = (2005, 12, 31);

fn birthday_bounds() -> (NaiveDate, NaiveDate) {
    let lo = NaiveDate::from_ymd_opt(BIRTHDAY_MIN.0, BIRTHDAY_MIN.1, BIRTHDAY_MIN.2).unwrap();
    let hi = NaiveDate::from_ymd_opt(BIRTHDAY_MAX.0, BIRTHDAY_MAX.1, BIRTHDAY_MAX.2).unwrap();
    (lo, hi)
}

/// Uniform ISO-8601 date in `[1950-01-01, 2005-12-31]`.
pub fn gen_birthday(rng: &mut SplitMix64) -> String {
    let (lo, hi) = birthday_bounds();
    let span = (hi - lo).num_days() as u64 + 1;
    let date = lo + chrono::Days::new(rng.below(span));
    date.format("%Y-%m-%d").to_string()
}

/// RFC-4122 version-4 UUID from 16 seeded bytes.
pub fn gen_uuid(rng: &mut SplitMix64) -> String {
    let mut bytes = [0u8; 16];
    rng.fill_bytes(&mut bytes);
    uuid::Builder::from_random_bytes(bytes).into_uuid().to_string()
}

static PHONE_RE: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"^[2-9][0-9]{2}-[2-9][0-9]{2}-[0-9]{4}$").unwrap());
static SSN_RE: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(
        r"^(?:0[1-9][0-9]|00[1-9]|[1-5][0-9]{2}|6[0-5][0-9]|66[0-5789]|7[0-2][0-9]|73[0-3]|7[56][0-9]|77[012])-(?:0[1-9]|[1-9][0-9])-(?:0[1-9][0-9]{2}|00[1-9][0-9]|000[1-9]|[1-9][0-9]{3})$",
    )
    .unwrap()
});
static EMAIL_RE: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(r"^[a-z]+[0-9]{4,6}@(gmail\.com|outlook\.com|icloud\.com|yahoo\.com)$").unwrap()
});
static NAME_RE: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"^[A-Z][A-Za-z]*( [A-Z][A-Za-z]*){1,2}$").unwrap());
static JOB_RE: LazyLock<Regex> = LazyLock::new(|| Regex::new(r"^[A-Za-z][A-Za-z ]*$").unwrap());
static ADDRESS_RE: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(r"^[1-9][0-9]{0,3} [A-Z][a-z]+ [A-Z][a-z]+, [A-Z][a-z]+( [A-Z][a-z]+)*$").unwrap()
});
static UUID_RE: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(r"^[0-9a-f]{8}-[0-9a-f]{4}-4[0-9a-f]{3}-[89ab][0-9a-f]{3}-[0-9a-f]{12}$").unwrap()
});
static BIRTHDAY_RE: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"^[0-9]{4}-[0-9]{2}-[0-9]{2}$").unwrap());

/// Pure format predicate for one attribute value. Bitcoin validation performs
/// full Base58Check checksum verification.
pub fn validate(kind: PiiKind, value: &str) -> bool {
    match kind {
        PiiKind::Name => NAME_RE.is_match(value),
        PiiKind::JobTitle => JOB_RE.is_match(value),
        PiiKind::Phone | PiiKind::Fax => PHONE_RE.is_match(value),
        PiiKind::Birthday => {
            if !BIRTHDAY_RE.is_match(value) {
                return false;
            }
            let (lo, hi) = birthday_bounds();
            NaiveDate::parse_from_str(value, "%Y-%m-%d")
                .map(|d| d >= lo && d <= hi)
                .unwrap_or(false)
        }
        PiiKind::Ssn => SSN_RE.is_match(value),
        PiiKind::Address => ADDRESS_RE.is_match(value),
        PiiKind::Email => EMAIL_RE.is_match(value),
        PiiKind::Bitcoin => {
            if !(26..=35).contains(&value.len()) || !value.starts_with('1') {
                return false;
            }
            matches!(base58::decode_check(value), Some((0, payload)) if payload.len() == 20)
        }
        PiiKind::Uuid => UUID_RE.is_match(value),
    }
}

/// Writes records as JSON Lines, one record per line.
pub fn write_records(path: &Path, records: &[PiiRecord]) -> Result<(), PiiError> {
    let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
    for record in records {
        serde_json::to_writer(&mut out, record).map_err(std::io::Error::other)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

/// Reads a JSON Lines record file. Blank lines are skipped.
pub fn read_records(path: &Path) -> Result<Vec<PiiRecord>, PiiError> {
    let reader = BufReader::new(std::fs::File::open(path)?);
    let mut records = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        records.push(
            serde_json::from_str(&line).map_err(|source| PiiError::Parse { line: idx + 1, source })?,
        );
    }
    Ok(records)
}
