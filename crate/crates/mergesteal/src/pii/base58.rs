//! Base58Check encoding and verification for synthetic bitcoin addresses.
//!
//! Version byte + payload + 4-byte checksum (the first four bytes of
//! SHA-256(SHA-256(version + payload))), encoded in the 58-character
//! bitcoin alphabet. Leading zero bytes encode as leading `1`s.

use sha2::{Digest, Sha256};

const ALPHABET: &[u8; 58] = b"123456789ABCDEFGHJKLMNPQRSTUVWXYZabcdefghijkmnopqrstuvwxyz";

fn digit_value(c: u8) -> Option<u32> {
    ALPHABET.iter().position(|&a| a == c).map(|p| p as u32)
}

fn checksum(data: &[u8]) -> [u8; 4] {
    let first = Sha256::digest(data);
    let second = Sha256::digest(first);
    [second[0], second[1], second[2], second[3]]
}

/// Encodes raw bytes in plain base58 (no checksum).
pub fn encode(data: &[u8]) -> String {
    let zeros = data.iter().take_while(|&&b| b == 0).count();
    let mut digits: Vec<u8> = Vec::with_capacity(data.len() * 138 / 100 + 1);
    for &byte in &data[zeros..] {
        let mut carry = byte as u32;
        for d in digits.iter_mut() {
            carry += (*d as u32) << 8;
            *d = (carry % 58) as u8;
            carry /= 58;
        }
        while carry > 0 {
            digits.push((carry % 58) as u8);
            carry /= 58;
        }
    }
    let mut out = String::with_capacity(zeros + digits.len());
    for _ in 0..zeros {
        out.push('1');
    }
    for &d in digits.iter().rev() {
        out.push(ALPHABET[d as usize] as char);
    }
    out
}

/// Decodes plain base58. Returns `None` on any character outside the alphabet.
pub fn decode(s: &str) -> Option<Vec<u8>> {
    let bytes = s.as_bytes();
    let zeros = bytes.iter().take_while(|&&b| b == b'1').count();
    let mut out: Vec<u8> = Vec::with_capacity(s.len() * 733 / 1000 + 1);
    for &c in &bytes[zeros..] {
        let mut carry = digit_value(c)?;
        for d in out.iter_mut() {
            carry += (*d as u32) * 58;
            *d = (carry & 0xFF) as u8;
            carry >>= 8;
        }
        while carry > 0 {
            out.push((carry & 0xFF) as u8);
            carry >>= 8;
        }
    }
    let mut result = vec![0u8; zeros];
    result.extend(out.iter().rev());
    Some(result)
}

/// Encodes `version + payload` with the 4-byte double-SHA-256 checksum.
pub fn encode_check(version: u8, payload: &[u8]) -> String {
    let mut data = Vec::with_capacity(payload.len() + 5);
    data.push(version);
    data.extend_from_slice(payload);
    let chk = checksum(&data);
    data.extend_from_slice(&chk);
    encode(&data)
}

/// Decodes a Base58Check string, verifying the checksum. Returns the version
/// byte and payload on success.
pub fn decode_check(s: &str) -> Option<(u8, Vec<u8>)> {
    let raw = decode(s)?;
    if raw.len() < 5 {
        return None;
    }
    let (body, chk) = raw.split_at(raw.len() - 4);
    if checksum(body) != chk {
        return None;
    }
    Some((body[0], body[1..].to_vec()))
}
