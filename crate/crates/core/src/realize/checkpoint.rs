//! Persistent record of realized multisets, one bit per rank in `M_n`.
//!
//! File layout (little endian): magic `BHRC`, version `u32`, `n` as `u32`,
//! a reserved `u32` (zero), `total` as `u64`, `realized_count` as `u64`,
//! then `ceil(total / 8)` bitmap bytes with rank `r` at bit `r % 8` of byte
//! `r / 8`.

use std::fs;
use std::io::Write;
use std::path::Path as FsPath;

use crate::chord::ProblemSize;
use crate::error::{Error, Result};
use crate::rank::MultisetRanker;

pub const MAGIC: &[u8; 4] = b"BHRC";
pub const VERSION: u32 = 1;
const HEADER_LEN: usize = 32;
/// Largest bitmap held in memory, in bytes.
pub const MAX_BITMAP_BYTES: u64 = 1 << 30;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CampaignCheckpoint {
    n: usize,
    total: u64,
    bitmap: Vec<u8>,
    realized_count: u64,
}

impl CampaignCheckpoint {
    pub fn new(n: usize) -> Result<Self> {
        let size = ProblemSize::new(n)?;
        let total = MultisetRanker::new(size.n())?.total();
        let total = u64::try_from(total)
            .ok()
            .filter(|t| t.div_ceil(8) <= MAX_BITMAP_BYTES)
            .ok_or(Error::TooLarge {
                what: "checkpoint bitmap",
                n,
                limit: largest_supported(),
            })?;
        Ok(Self {
            n,
            total,
            bitmap: vec![0; total.div_ceil(8) as usize],
            realized_count: 0,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn realized_count(&self) -> u64 {
        self.realized_count
    }

    pub fn bitmap(&self) -> &[u8] {
        &self.bitmap
    }

    pub fn get(&self, rank: u64) -> bool {
        rank < self.total && self.bitmap[(rank / 8) as usize] >> (rank % 8) & 1 == 1
    }

    /// Sets a bit; returns `true` if it was clear.
    pub fn set(&mut self, rank: u64) -> bool {
        assert!(rank < self.total, "rank {rank} out of range");
        let byte = &mut self.bitmap[(rank / 8) as usize];
        let mask = 1u8 << (rank % 8);
        let fresh = *byte & mask == 0;
        *byte |= mask;
        self.realized_count += fresh as u64;
        fresh
    }

    /// Bitwise OR of `other` into `self`.
    pub fn merge(&mut self, other: &CampaignCheckpoint) -> Result<()> {
        if other.n != self.n {
            return Err(Error::Checkpoint(format!(
                "cannot merge n={} into n={}",
                other.n, self.n
            )));
        }
        for (a, b) in self.bitmap.iter_mut().zip(&other.bitmap) {
            *a |= b;
        }
        self.realized_count = popcount(&self.bitmap);
        Ok(())
    }

    pub fn ranks(&self) -> impl Iterator<Item = u64> + '_ {
        self.bitmap.iter().enumerate().flat_map(|(i, &b)| {
            (0..8)
                .filter(move |k| b >> k & 1 == 1)
                .map(move |k| i as u64 * 8 + k)
        })
    }

    /// Checks the stored count and that every set bit names an admissible
    /// multiset.
    pub fn validate(&self) -> Result<()> {
        if popcount(&self.bitmap) != self.realized_count {
            return Err(Error::Checkpoint(
                "realized_count disagrees with bitmap".into(),
            ));
        }
        let ranker = MultisetRanker::new(self.n)?;
        for r in self.ranks() {
            if r >= self.total {
                return Err(Error::Checkpoint(format!("bit {r} beyond total")));
            }
            if !ranker.unrank(r as u128)?.is_admissible() {
                return Err(Error::Checkpoint(format!("rank {r} is not admissible")));
            }
        }
        Ok(())
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(HEADER_LEN + self.bitmap.len());
        out.extend_from_slice(MAGIC);
        out.extend_from_slice(&VERSION.to_le_bytes());
        out.extend_from_slice(&(self.n as u32).to_le_bytes());
        out.extend_from_slice(&0u32.to_le_bytes());
        out.extend_from_slice(&self.total.to_le_bytes());
        out.extend_from_slice(&self.realized_count.to_le_bytes());
        out.extend_from_slice(&self.bitmap);
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let bad = |msg: &str| Error::Checkpoint(msg.to_string());
        if bytes.len() < HEADER_LEN {
            return Err(bad("truncated header"));
        }
        if &bytes[..4] != MAGIC {
            return Err(bad("bad magic"));
        }
        let u32_at = |i: usize| u32::from_le_bytes(bytes[i..i + 4].try_into().expect("4 bytes"));
        let u64_at = |i: usize| u64::from_le_bytes(bytes[i..i + 8].try_into().expect("8 bytes"));
        if u32_at(4) != VERSION {
            return Err(Error::Checkpoint(format!(
                "unsupported version {}",
                u32_at(4)
            )));
        }
        if u32_at(12) != 0 {
            return Err(bad("reserved field is not zero"));
        }
        let n = u32_at(8) as usize;
        let mut cp = Self::new(n)?;
        if u64_at(16) != cp.total {
            return Err(bad("total does not match n"));
        }
        let body = &bytes[HEADER_LEN..];
        if body.len() != cp.bitmap.len() {
            return Err(bad("bitmap length does not match total"));
        }
        cp.bitmap.copy_from_slice(body);
        cp.realized_count = u64_at(24);
        if popcount(&cp.bitmap) != cp.realized_count {
            return Err(bad("realized_count disagrees with bitmap"));
        }
        Ok(cp)
    }

    pub fn load(path: &FsPath) -> Result<Self> {
        Self::from_bytes(&fs::read(path)?)
    }

    /// Writes to a temporary file beside `path` and renames it into place.
    pub fn save(&self, path: &FsPath) -> Result<()> {
        let mut tmp = path.as_os_str().to_owned();
        tmp.push(".tmp");
        let tmp = std::path::PathBuf::from(tmp);
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(&self.to_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, path)?;
        Ok(())
    }
}

fn popcount(bytes: &[u8]) -> u64 {
    bytes.iter().map(|b| b.count_ones() as u64).sum()
}

fn largest_supported() -> usize {
    (3..)
        .take_while(|&n| {
            MultisetRanker::new(n)
                .ok()
                .and_then(|r| u64::try_from(r.total()).ok())
                .is_some_and(|t| t.div_ceil(8) <= MAX_BITMAP_BYTES)
        })
        .last()
        .unwrap_or(3)
}
