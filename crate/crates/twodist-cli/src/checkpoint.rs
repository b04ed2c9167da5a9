//! Versioned binary checkpoints for the sharded search. A checkpoint
//! records, per worker, the highest fully-settled split counter and the
//! colorings found so far; resuming skips every settled subtree.

use std::path::Path;

use sha2::{Digest, Sha256};

use crate::CliError;

pub const MAGIC: &[u8; 8] = b"TDCHKPT1";

/// Identifies the run a checkpoint belongs to; every field must match on
/// resume.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckpointHeader {
    pub graph_digest: [u8; 32],
    pub k: u8,
    pub keydepth: u32,
    pub shard_id: u32,
    pub shard_count: u32,
    pub threads: u32,
    pub n: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SubshardState {
    /// All split-counter values up to here are settled for this worker.
    pub calls_done: u64,
    /// Colorings found in settled subtrees, graph vertex order.
    pub colorings: Vec<Vec<u8>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckpointData {
    pub header: CheckpointHeader,
    pub subshards: Vec<SubshardState>,
}

fn push_u32(buf: &mut Vec<u8>, v: u32) {
    buf.extend_from_slice(&v.to_le_bytes());
}

fn push_u64(buf: &mut Vec<u8>, v: u64) {
    buf.extend_from_slice(&v.to_le_bytes());
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8], CliError> {
        let end = self.pos.checked_add(n).filter(|&e| e <= self.bytes.len());
        let end = end.ok_or_else(|| CliError::Io(String::from("checkpoint: truncated")))?;
        let s = &self.bytes[self.pos..end];
        self.pos = end;
        Ok(s)
    }

    fn u32(&mut self) -> Result<u32, CliError> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> Result<u64, CliError> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }
}

impl CheckpointData {
    pub fn fresh(header: CheckpointHeader) -> Self {
        let threads = header.threads as usize;
        CheckpointData {
            header,
            subshards: vec![SubshardState::default(); threads],
        }
    }

    pub fn encode(&self) -> Vec<u8> {
        let h = &self.header;
        let mut buf = Vec::new();
        buf.extend_from_slice(MAGIC);
        buf.extend_from_slice(&h.graph_digest);
        buf.push(h.k);
        push_u32(&mut buf, h.keydepth);
        push_u32(&mut buf, h.shard_id);
        push_u32(&mut buf, h.shard_count);
        push_u32(&mut buf, h.threads);
        push_u32(&mut buf, h.n);
        for sub in &self.subshards {
            push_u64(&mut buf, sub.calls_done);
            push_u32(&mut buf, sub.colorings.len() as u32);
            for c in &sub.colorings {
                debug_assert_eq!(c.len(), h.n as usize);
                buf.extend_from_slice(c);
            }
        }
        let hash: [u8; 32] = Sha256::digest(&buf).into();
        buf.extend_from_slice(&hash);
        buf
    }

    pub fn decode(bytes: &[u8]) -> Result<Self, CliError> {
        let bad = |m: &str| CliError::Io(format!("checkpoint: {m}"));
        if bytes.len() < MAGIC.len() + 32 {
            return Err(bad("too short"));
        }
        let (payload, hash) = bytes.split_at(bytes.len() - 32);
        let expect: [u8; 32] = Sha256::digest(payload).into();
        if hash != expect {
            return Err(bad("integrity hash mismatch"));
        }
        let mut r = Reader { bytes: payload, pos: 0 };
        if r.take(MAGIC.len())? != MAGIC {
            return Err(bad("bad magic"));
        }
        let graph_digest: [u8; 32] = r.take(32)?.try_into().unwrap();
        let k = r.take(1)?[0];
        let header = CheckpointHeader {
            graph_digest,
            k,
            keydepth: r.u32()?,
            shard_id: r.u32()?,
            shard_count: r.u32()?,
            threads: r.u32()?,
            n: r.u32()?,
        };
        let mut subshards = Vec::with_capacity(header.threads as usize);
        for _ in 0..header.threads {
            let calls_done = r.u64()?;
            let count = r.u32()? as usize;
            let mut colorings = Vec::with_capacity(count);
            for _ in 0..count {
                colorings.push(r.take(header.n as usize)?.to_vec());
            }
            subshards.push(SubshardState { calls_done, colorings });
        }
        if r.pos != payload.len() {
            return Err(bad("trailing bytes"));
        }
        Ok(CheckpointData { header, subshards })
    }

    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        crate::formats::atomic_write(path, &self.encode())
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let bytes = std::fs::read(path).map_err(|e| CliError::io_ctx(path, e))?;
        Self::decode(&bytes)
    }
}
