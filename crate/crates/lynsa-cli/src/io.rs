//! Array serialization.
//!
//! Text format: one integer per line, 1-based positions / lengths.
//!
//! Binary format, per array record:
//!   - 8-byte magic `LYNSAARR`
//!   - u64 little-endian entry count
//!   - one width byte (4 or 8)
//!   - count fixed-width little-endian integers
//!
//! Emitting both arrays concatenates two records (suffix array first).

use std::io::{self, Write};

use lynsa::Index;

pub const MAGIC: [u8; 8] = *b"LYNSAARR";

pub fn write_text(w: &mut impl Write, values: &[Index]) -> io::Result<()> {
    for &v in values {
        writeln!(w, "{v}")?;
    }
    Ok(())
}

pub fn write_binary(w: &mut impl Write, values: &[Index]) -> io::Result<()> {
    let width = std::mem::size_of::<Index>() as u8;
    w.write_all(&MAGIC)?;
    w.write_all(&(values.len() as u64).to_le_bytes())?;
    w.write_all(&[width])?;
    for &v in values {
        w.write_all(&v.to_le_bytes())?;
    }
    Ok(())
}

/// Parses one binary record, returning the entries and the unconsumed
/// tail of the input.
pub fn read_binary(bytes: &[u8]) -> Result<(Vec<u64>, &[u8]), String> {
    if bytes.len() < 17 {
        return Err("truncated header".to_string());
    }
    if bytes[..8] != MAGIC {
        return Err("bad magic".to_string());
    }
    let count = u64::from_le_bytes(bytes[8..16].try_into().unwrap()) as usize;
    let width = bytes[16] as usize;
    if width != 4 && width != 8 {
        return Err(format!("unsupported width {width}"));
    }
    let payload = &bytes[17..];
    if payload.len() < count * width {
        return Err("truncated payload".to_string());
    }
    let values = payload[..count * width]
        .chunks_exact(width)
        .map(|chunk| {
            if width == 4 {
                u32::from_le_bytes(chunk.try_into().unwrap()) as u64
            } else {
                u64::from_le_bytes(chunk.try_into().unwrap())
            }
        })
        .collect();
    Ok((values, &payload[count * width..]))
}

/// Order-preserving compaction of the observed alphabet onto 1..=k,
/// allowing inputs that contain byte 0. Returns the remapped bytes and
/// the effective alphabet size k.
pub fn remap_alphabet(raw: &[u8]) -> (Vec<u8>, usize) {
    let mut present = [false; 256];
    for &b in raw {
        present[b as usize] = true;
    }
    let mut code = [0u8; 256];
    let mut next = 0u8;
    for (b, &p) in present.iter().enumerate() {
        if p {
            next += 1;
            code[b] = next;
        }
    }
    (raw.iter().map(|&b| code[b as usize]).collect(), next as usize)
}
