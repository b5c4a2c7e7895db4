//! Canonical on-disk forms: the JSON basis document and CSV export of the up
//! operator's matrix.
//!
//! A document looks like
//!
//! ```text
//! {"format_version":"1","n":2,"kind":"sjb","chains":[
//! {"start_rank":0,"vectors":[[{"subset":[],"coeff":"1"}],...]},
//! {"start_rank":1,"vectors":[[{"subset":[1],"coeff":"-1"},{"subset":[2],"coeff":"1"}]]}
//! ]}
//! ```
//!
//! with one chain per line. Subsets are sorted 1-indexed element lists and
//! coefficients are decimal strings. Terms appear in ascending mask order.
//! Decoding rejects anything the encoder would not have produced, so
//! decode followed by encode reproduces the input bytes.

use std::fs;
use std::io::Write;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{GroundSize, Subset, DEFAULT_CAP};
use crate::operators::{up_matrix, UpMatrix};
use crate::scd::{ChainDecomposition, SubsetChain};
use crate::sjb::{SymJordanBasis, SymJordanChain};
use crate::vector::ExactVector;

pub const FORMAT_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Sjb,
    Scd,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermRecord {
    pub subset: Vec<usize>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JordanChainRecord {
    pub start_rank: usize,
    pub vectors: Vec<Vec<TermRecord>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubsetChainRecord {
    pub start_rank: usize,
    pub subsets: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ChainRecord {
    Jordan(JordanChainRecord),
    Subsets(SubsetChainRecord),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisDocument {
    pub format_version: String,
    pub n: usize,
    pub kind: Kind,
    pub chains: Vec<ChainRecord>,
}

/// A decoded document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decoded {
    Sjb(SymJordanBasis),
    Scd(ChainDecomposition),
}

fn vector_record(v: &ExactVector) -> Vec<TermRecord> {
    v.terms()
        .map(|(x, c)| TermRecord {
            subset: x.elements(),
            coeff: c.to_string(),
        })
        .collect()
}

impl BasisDocument {
    pub fn from_sjb(basis: &SymJordanBasis) -> Self {
        BasisDocument {
            format_version: FORMAT_VERSION.into(),
            n: basis.ground().get(),
            kind: Kind::Sjb,
            chains: basis
                .chains()
                .iter()
                .map(|c| {
                    ChainRecord::Jordan(JordanChainRecord {
                        start_rank: c.start_rank(),
                        vectors: c.vectors().iter().map(vector_record).collect(),
                    })
                })
                .collect(),
        }
    }

    pub fn from_scd(d: &ChainDecomposition) -> Self {
        BasisDocument {
            format_version: FORMAT_VERSION.into(),
            n: d.ground().get(),
            kind: Kind::Scd,
            chains: d
                .chains()
                .iter()
                .map(|c| {
                    ChainRecord::Subsets(SubsetChainRecord {
                        start_rank: c.start_rank(),
                        subsets: c.subsets().iter().map(|x| x.elements()).collect(),
                    })
                })
                .collect(),
        }
    }

    /// Canonical encoding, one chain per line, trailing newline.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        let kind = serde_json::to_string(&self.kind).expect("kind serializes");
        write!(
            out,
            "{{\"format_version\":{},\"n\":{},\"kind\":{},\"chains\":[",
            serde_json::to_string(&self.format_version).expect("string serializes"),
            self.n,
            kind
        )
        .expect("writing to a Vec cannot fail");
        for (i, chain) in self.chains.iter().enumerate() {
            if i > 0 {
                out.push(b',');
            }
            out.push(b'\n');
            serde_json::to_writer(&mut out, chain).expect("chain record serializes");
        }
        out.extend_from_slice(b"\n]}\n");
        out
    }

    pub fn from_slice(bytes: &[u8]) -> Result<Self> {
        Ok(serde_json::from_slice(bytes)?)
    }

    /// Validates the document against `cap` and builds the in-memory value.
    pub fn decode(&self, cap: usize) -> Result<Decoded> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Format(format!(
                "unsupported format_version {:?}",
                self.format_version
            )));
        }
        let n = GroundSize::with_cap(self.n, cap)?;
        match self.kind {
            Kind::Sjb => {
                let chains = self
                    .chains
                    .iter()
                    .enumerate()
                    .map(|(i, c)| match c {
                        ChainRecord::Jordan(r) => decode_jordan(r, n)
                            .map_err(|e| Error::Format(format!("chain {i}: {e}"))),
                        ChainRecord::Subsets(_) => Err(Error::Format(format!(
                            "chain {i}: subset chain in an sjb document"
                        ))),
                    })
                    .collect::<Result<_>>()?;
                Ok(Decoded::Sjb(SymJordanBasis::new(n, chains)?))
            }
            Kind::Scd => {
                let chains = self
                    .chains
                    .iter()
                    .enumerate()
                    .map(|(i, c)| match c {
                        ChainRecord::Subsets(r) => decode_subsets(r, n)
                            .map_err(|e| Error::Format(format!("chain {i}: {e}"))),
                        ChainRecord::Jordan(_) => Err(Error::Format(format!(
                            "chain {i}: vector chain in an scd document"
                        ))),
                    })
                    .collect::<Result<_>>()?;
                Ok(Decoded::Scd(ChainDecomposition::new(n, chains)?))
            }
        }
    }
}

fn decode_subset(elements: &[usize], n: GroundSize) -> Result<Subset> {
    if elements.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Format(format!(
            "subset {elements:?} is not strictly increasing"
        )));
    }
    Subset::from_elements(elements, n)
        .map_err(|_| Error::Format(format!("subset {elements:?} leaves [1, {n}]")))
}

fn decode_coeff(text: &str) -> Result<BigInt> {
    let c: BigInt = text
        .parse()
        .map_err(|_| Error::Format(format!("coefficient {text:?} is not an integer")))?;
    if c.is_zero() {
        return Err(Error::Format("zero coefficient stored".into()));
    }
    if c.to_string() != text {
        return Err(Error::Format(format!(
            "coefficient {text:?} is not in canonical form"
        )));
    }
    Ok(c)
}

fn decode_vector(terms: &[TermRecord], n: GroundSize) -> Result<ExactVector> {
    let mut raw = Vec::with_capacity(terms.len());
    for t in terms {
        let x = decode_subset(&t.subset, n)?;
        raw.push((x.mask(), decode_coeff(&t.coeff)?));
    }
    if raw.windows(2).any(|w| w[0].0 >= w[1].0) {
        return Err(Error::Format(
            "terms are not in ascending subset order".into(),
        ));
    }
    Ok(ExactVector::from_canonical(n, raw))
}

fn decode_jordan(r: &JordanChainRecord, n: GroundSize) -> Result<SymJordanChain> {
    let vectors = r
        .vectors
        .iter()
        .map(|v| decode_vector(v, n))
        .collect::<Result<_>>()?;
    SymJordanChain::new(n, r.start_rank, vectors)
}

fn decode_subsets(r: &SubsetChainRecord, n: GroundSize) -> Result<SubsetChain> {
    let subsets: Vec<Subset> = r
        .subsets
        .iter()
        .map(|s| decode_subset(s, n))
        .collect::<Result<_>>()?;
    if subsets.first().map(|x| x.rank()) != Some(r.start_rank) {
        return Err(Error::Format(format!(
            "start_rank {} does not match the first subset",
            r.start_rank
        )));
    }
    SubsetChain::new(n, subsets)
}

pub fn serialize_sjb(basis: &SymJordanBasis) -> Vec<u8> {
    BasisDocument::from_sjb(basis).to_bytes()
}

pub fn serialize_scd(d: &ChainDecomposition) -> Vec<u8> {
    BasisDocument::from_scd(d).to_bytes()
}

/// Parses and validates a document under the default cap.
pub fn deserialize(bytes: &[u8]) -> Result<Decoded> {
    deserialize_with_cap(bytes, DEFAULT_CAP)
}

pub fn deserialize_with_cap(bytes: &[u8], cap: usize) -> Result<Decoded> {
    BasisDocument::from_slice(bytes)?.decode(cap)
}

pub fn write_document(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes)?;
    Ok(())
}

pub fn read_document(path: &Path, cap: usize) -> Result<Decoded> {
    deserialize_with_cap(&fs::read(path)?, cap)
}

fn subset_label(x: Subset) -> String {
    let els: Vec<String> = x.elements().iter().map(ToString::to_string).collect();
    format!("{{{}}}", els.join(","))
}

/// CSV text of an up-operator matrix. The header row names the `k`-subsets
/// (columns); each following row starts with its `(k+1)`-subset.
pub fn up_matrix_csv(m: &UpMatrix) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let mut header = vec![format!("U[n={},k={}]", m.ground(), m.rank_index())];
    header.extend(m.col_labels().iter().map(|&x| subset_label(x)));
    w.write_record(&header).map_err(csv_error)?;
    for (r, &y) in m.row_labels().iter().enumerate() {
        let mut record = vec![subset_label(y)];
        record.extend((0..m.cols()).map(|c| m.entry(r, c).to_string()));
        w.write_record(&record).map_err(csv_error)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn csv_error(e: csv::Error) -> Error {
    Error::Io(std::io::Error::other(e))
}

pub fn export_up_matrix_csv(n: GroundSize, k: usize, path: &Path) -> Result<()> {
    let text = up_matrix_csv(&up_matrix(n, k)?)?;
    fs::write(path, text)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scd::build_scd;
    use crate::sjb::build_sjb;

    fn g(n: usize) -> GroundSize {
        GroundSize::new(n).unwrap()
    }

    #[test]
    fn base_document() {
        let bytes = serialize_sjb(&build_sjb(g(0)).unwrap());
        assert_eq!(
            String::from_utf8(bytes).unwrap(),
            "{\"format_version\":\"1\",\"n\":0,\"kind\":\"sjb\",\"chains\":[\n\
             {\"start_rank\":0,\"vectors\":[[{\"subset\":[],\"coeff\":\"1\"}]]}\n]}\n"
        );
    }

    #[test]
    fn round_trips() {
        for n in 0..=6 {
            let b = build_sjb(g(n)).unwrap();
            let bytes = serialize_sjb(&b);
            assert_eq!(deserialize(&bytes).unwrap(), Decoded::Sjb(b));
            let d = build_scd(g(n)).unwrap();
            let bytes = serialize_scd(&d);
            assert_eq!(deserialize(&bytes).unwrap(), Decoded::Scd(d));
        }
    }

    fn tweak(from: &str, to: &str) -> Result<Decoded> {
        let text = String::from_utf8(serialize_sjb(&build_sjb(g(2)).unwrap())).unwrap();
        assert!(text.contains(from), "{text}");
        deserialize(text.replacen(from, to, 1).as_bytes())
    }

    #[test]
    fn malformed_documents_are_rejected() {
        assert!(tweak("\"coeff\":\"2\"", "\"coeff\":\"0\"").is_err());
        assert!(tweak("\"coeff\":\"2\"", "\"coeff\":\"+2\"").is_err());
        assert!(tweak("\"coeff\":\"2\"", "\"coeff\":\"two\"").is_err());
        assert!(tweak("\"subset\":[1,2]", "\"subset\":[2,1]").is_err());
        assert!(tweak("\"subset\":[1,2]", "\"subset\":[1,3]").is_err());
        assert!(tweak("\"format_version\":\"1\"", "\"format_version\":\"2\"").is_err());
        assert!(tweak("\"kind\":\"sjb\"", "\"kind\":\"scd\"").is_err());
        assert!(tweak("\"start_rank\":0", "\"start_rank\":0,\"extra\":1").is_err());
        assert!(deserialize(b"not json").is_err());
        // terms out of order
        assert!(tweak(
            "[{\"subset\":[1],\"coeff\":\"1\"},{\"subset\":[2],\"coeff\":\"1\"}]",
            "[{\"subset\":[2],\"coeff\":\"1\"},{\"subset\":[1],\"coeff\":\"1\"}]"
        )
        .is_err());
    }

    #[test]
    fn tampered_values_still_decode() {
        let out = tweak("\"coeff\":\"2\"", "\"coeff\":\"3\"").unwrap();
        assert!(matches!(out, Decoded::Sjb(_)));
    }

    #[test]
    fn cap_applies_on_decode() {
        let bytes = serialize_scd(&build_scd(g(5)).unwrap());
        assert!(matches!(
            deserialize_with_cap(&bytes, 4),
            Err(Error::Capacity { n: 5, cap: 4 })
        ));
    }

    #[test]
    fn csv_exports() {
        let text = up_matrix_csv(&up_matrix(g(2), 0).unwrap()).unwrap();
        assert_eq!(text, "\"U[n=2,k=0]\",{}\n{1},1\n{2},1\n");
        let text = up_matrix_csv(&up_matrix(g(2), 1).unwrap()).unwrap();
        assert_eq!(text, "\"U[n=2,k=1]\",{1},{2}\n\"{1,2}\",1,1\n");
        let text = up_matrix_csv(&up_matrix(g(3), 1).unwrap()).unwrap();
        let body: Vec<Vec<u32>> = text
            .lines()
            .skip(1)
            .map(|l| {
                let mut r = csv::ReaderBuilder::new()
                    .has_headers(false)
                    .from_reader(l.as_bytes());
                let rec = r.records().next().unwrap().unwrap();
                rec.iter().skip(1).map(|x| x.parse().unwrap()).collect()
            })
            .collect();
        assert_eq!(body.len(), 3);
        assert!(body
            .iter()
            .all(|r| r.len() == 3 && r.iter().sum::<u32>() == 2));
        assert!((0..3).all(|c| body.iter().map(|r| r[c]).sum::<u32>() == 2));
    }
}
