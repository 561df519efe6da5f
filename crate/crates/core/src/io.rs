//! On-disk formats: the SUBSET01 binary set format, the density-profile CSV,
//! and the JSON forms of threshold sequences, machine tables and k-safety
//! instances. All writers are deterministic byte-for-byte.

use std::io::{Read, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bits::Bitstring;
use crate::density::density_profile;
use crate::diagonal::MachineTable;
use crate::error::{Error, Result};
use crate::kolmo::KSafeInstance;
use crate::set::FinitePrefixSet;
use crate::thresholds::ThresholdSequence;

pub const SET_MAGIC: &[u8; 8] = b"SUBSET01";

/// Writes a set: magic, horizon as 8-byte little-endian, then ⌈horizon/8⌉
/// bytes with bit n at byte n/8, position n mod 8, LSB first.
pub fn write_set<W: Write>(w: &mut W, set: &FinitePrefixSet) -> Result<()> {
    w.write_all(SET_MAGIC)?;
    w.write_all(&set.horizon().to_le_bytes())?;
    let nbytes = set.horizon().div_ceil(8) as usize;
    let mut bytes = vec![0u8; nbytes];
    for (i, word) in set.words().iter().enumerate() {
        for b in 0..8 {
            let at = i * 8 + b;
            if at < nbytes {
                bytes[at] = (word >> (8 * b)) as u8;
            }
        }
    }
    w.write_all(&bytes)?;
    Ok(())
}

pub fn read_set<R: Read>(r: &mut R) -> Result<FinitePrefixSet> {
    let mut magic = [0u8; 8];
    r.read_exact(&mut magic)?;
    if &magic != SET_MAGIC {
        return Err(Error::Format(format!(
            "bad magic {:?}, expected {:?}",
            String::from_utf8_lossy(&magic),
            String::from_utf8_lossy(SET_MAGIC)
        )));
    }
    let mut h = [0u8; 8];
    r.read_exact(&mut h)?;
    let horizon = u64::from_le_bytes(h);
    let nbytes = horizon.div_ceil(8) as usize;
    let mut bytes = vec![0u8; nbytes];
    r.read_exact(&mut bytes)?;
    let mut words = vec![0u64; horizon.div_ceil(64) as usize];
    for (at, byte) in bytes.iter().enumerate() {
        words[at / 8] |= (*byte as u64) << (8 * (at % 8));
    }
    // Bits past the horizon must be clear for count/equality to be exact.
    let spare = horizon % 8;
    if spare != 0 && bytes[nbytes - 1] >> spare != 0 {
        return Err(Error::Format("padding bits past the horizon are set".into()));
    }
    Ok(FinitePrefixSet::from_raw_words(horizon, words))
}

/// Writes the profile CSV: header `n,count,density_num,density_den`, one row
/// per window point, densities reduced.
pub fn write_profile_csv<W: Write>(w: &mut W, set: &FinitePrefixSet) -> Result<()> {
    writeln!(w, "n,count,density_num,density_den")?;
    let profile = density_profile(set);
    let mut count = 0u64;
    for n in 0..set.horizon() {
        count += set.bit(n) as u64;
        let d = profile.value(n)?;
        writeln!(w, "{n},{count},{},{}", d.numer(), d.denom())?;
    }
    Ok(())
}

pub fn write_thresholds<W: Write>(w: &mut W, t: &ThresholdSequence) -> Result<()> {
    serde_json::to_writer_pretty(&mut *w, t)
        .map_err(|e| Error::Format(format!("threshold serialization: {e}")))?;
    writeln!(w)?;
    Ok(())
}

/// Loads a threshold sequence and re-validates the context-free constraints.
pub fn read_thresholds<R: Read>(r: &mut R) -> Result<ThresholdSequence> {
    let t: ThresholdSequence =
        serde_json::from_reader(r).map_err(|e| Error::Format(format!("threshold JSON: {e}")))?;
    t.validate_structure()?;
    Ok(t)
}

#[derive(Serialize, Deserialize)]
struct MachineEntryFile {
    machine: u32,
    input: u64,
    output: u8,
    stage: u64,
}

#[derive(Serialize, Deserialize)]
struct MachineTableFile {
    budget: u64,
    entries: Vec<MachineEntryFile>,
}

pub fn write_machine_table<W: Write>(w: &mut W, table: &MachineTable) -> Result<()> {
    let file = MachineTableFile {
        budget: table.budget(),
        entries: table
            .entries()
            .map(|(machine, input, output, stage)| MachineEntryFile {
                machine,
                input,
                output,
                stage,
            })
            .collect(),
    };
    serde_json::to_writer_pretty(&mut *w, &file)
        .map_err(|e| Error::Format(format!("machine table serialization: {e}")))?;
    writeln!(w)?;
    Ok(())
}

pub fn read_machine_table<R: Read>(r: &mut R) -> Result<MachineTable> {
    let file: MachineTableFile =
        serde_json::from_reader(r).map_err(|e| Error::Format(format!("machine table JSON: {e}")))?;
    MachineTable::new(
        file.budget,
        file.entries
            .into_iter()
            .map(|e| (e.machine, e.input, e.output, e.stage)),
    )
}

#[derive(Serialize, Deserialize)]
struct KSafeInstanceFile {
    universe: u64,
    m: u64,
    k: u32,
    strings: Vec<String>,
    pieces: Vec<Vec<u64>>,
}

pub fn read_ksafe_instance<R: Read>(r: &mut R) -> Result<KSafeInstance> {
    let file: KSafeInstanceFile =
        serde_json::from_reader(r).map_err(|e| Error::Format(format!("instance JSON: {e}")))?;
    let strings = file
        .strings
        .iter()
        .map(|s| Bitstring::from_str(s))
        .collect::<Result<Vec<_>>>()?;
    let pieces = file
        .pieces
        .into_iter()
        .map(|members| FinitePrefixSet::from_members(file.universe, members))
        .collect::<Result<Vec<_>>>()?;
    Ok(KSafeInstance {
        strings,
        pieces,
        m: file.m,
        k: file.k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_roundtrip_and_layout() {
        let s = FinitePrefixSet::from_members(13, [0, 5, 8, 12]).unwrap();
        let mut buf = Vec::new();
        write_set(&mut buf, &s).unwrap();
        assert_eq!(&buf[..8], SET_MAGIC);
        assert_eq!(u64::from_le_bytes(buf[8..16].try_into().unwrap()), 13);
        // bits 0 and 5 in byte 0; bits 8 and 12 in byte 1.
        assert_eq!(buf[16], 0b0010_0001);
        assert_eq!(buf[17], 0b0001_0001);
        assert_eq!(buf.len(), 16 + 2);
        let back = read_set(&mut buf.as_slice()).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn bad_magic_and_bad_padding_rejected() {
        let s = FinitePrefixSet::from_members(3, [1]).unwrap();
        let mut buf = Vec::new();
        write_set(&mut buf, &s).unwrap();
        let mut corrupt = buf.clone();
        corrupt[0] = b'X';
        assert!(read_set(&mut corrupt.as_slice()).is_err());
        let mut padded = buf.clone();
        *padded.last_mut().unwrap() |= 0b1000;
        assert!(read_set(&mut padded.as_slice()).is_err());
    }

    #[test]
    fn profile_csv_shape() {
        let s = FinitePrefixSet::from_members(4, [0, 2]).unwrap();
        let mut buf = Vec::new();
        write_profile_csv(&mut buf, &s).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "n,count,density_num,density_den");
        assert_eq!(lines[1], "0,1,1,1");
        assert_eq!(lines[2], "1,1,1,2");
        assert_eq!(lines[3], "2,2,2,3");
        assert_eq!(lines[4], "3,2,1,2");
    }

    #[test]
    fn thresholds_roundtrip_with_validation() {
        use crate::thresholds::Scheme;
        let t = ThresholdSequence::new(Scheme::Interval, vec![1, 2, 3, 7, 22]).unwrap();
        let mut buf = Vec::new();
        write_thresholds(&mut buf, &t).unwrap();
        let back = read_thresholds(&mut buf.as_slice()).unwrap();
        assert_eq!(back, t);
        // A violating file is rejected on load.
        let bad = r#"{"scheme":"interval","values":[1,2,3,6]}"#;
        assert!(read_thresholds(&mut bad.as_bytes()).is_err());
    }

    #[test]
    fn machine_table_roundtrip() {
        let table = MachineTable::new(100, [(0, 0, 1, 5), (2, 11, 0, 30)]).unwrap();
        let mut buf = Vec::new();
        write_machine_table(&mut buf, &table).unwrap();
        let back = read_machine_table(&mut buf.as_slice()).unwrap();
        assert_eq!(back, table);
    }

    #[test]
    fn ksafe_instance_parses() {
        let text = r#"{
            "universe": 10, "m": 2, "k": 3,
            "strings": ["", "0", "101"],
            "pieces": [[0,1,2,3,4],[5,6,7,8,9]]
        }"#;
        let inst = read_ksafe_instance(&mut text.as_bytes()).unwrap();
        assert_eq!(inst.strings.len(), 3);
        assert_eq!(inst.pieces.len(), 2);
        assert_eq!(inst.pieces[0].count(), 5);
        assert_eq!((inst.m, inst.k), (2, 3));
    }
}
