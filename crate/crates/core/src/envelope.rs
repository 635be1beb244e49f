//! One file format for every oracle kind: a JSON document with a magic
//! string, a format version, and a kind-tagged payload, so the query
//! front-end can dispatch without extra flags.

use serde::{Deserialize, Serialize};

use crate::dso::VcDso;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::preserver::{DetourOracle, Preserver};
use crate::reach::FieldMatrixOracle;
use crate::sampling_oracle::SampledPathOracle;
use crate::tree_oracle::FtLookupTree;
use crate::vc::{VcKernelOracle, VcSubsetOracle, VcTreeOracle};

pub const MAGIC: &str = "ftso-oracle";
pub const VERSION: u32 = 1;

/// A preserver is a subgraph, so its envelope carries the graph it came
/// from; queries answer distances inside the kept subgraph minus failures.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PreserverPayload {
    pub graph: Graph,
    pub preserver: Preserver,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data")]
pub enum OraclePayload {
    #[serde(rename = "kpath-tree")]
    KpathTree(FtLookupTree),
    #[serde(rename = "kpath-sample")]
    KpathSample(SampledPathOracle),
    #[serde(rename = "vc-subset")]
    VcSubset(VcSubsetOracle),
    #[serde(rename = "vc-tree")]
    VcTree(VcTreeOracle),
    #[serde(rename = "vc-kernel")]
    VcKernel(VcKernelOracle),
    #[serde(rename = "vc-dso")]
    VcDso(VcDso),
    #[serde(rename = "preserver")]
    Preserver(PreserverPayload),
    #[serde(rename = "detour")]
    Detour(DetourOracle),
    #[serde(rename = "reach")]
    Reach(FieldMatrixOracle),
}

impl OraclePayload {
    pub fn kind(&self) -> &'static str {
        match self {
            OraclePayload::KpathTree(_) => "kpath-tree",
            OraclePayload::KpathSample(_) => "kpath-sample",
            OraclePayload::VcSubset(_) => "vc-subset",
            OraclePayload::VcTree(_) => "vc-tree",
            OraclePayload::VcKernel(_) => "vc-kernel",
            OraclePayload::VcDso(_) => "vc-dso",
            OraclePayload::Preserver(_) => "preserver",
            OraclePayload::Detour(_) => "detour",
            OraclePayload::Reach(_) => "reach",
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Envelope {
    pub magic: String,
    pub version: u32,
    pub payload: OraclePayload,
}

impl Envelope {
    pub fn new(payload: OraclePayload) -> Envelope {
        Envelope {
            magic: MAGIC.into(),
            version: VERSION,
            payload,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string(self).map_err(|e| Error::Envelope(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Envelope> {
        let env: Envelope =
            serde_json::from_str(text).map_err(|e| Error::Envelope(e.to_string()))?;
        if env.magic != MAGIC {
            return Err(Error::Envelope(format!(
                "bad magic '{}', expected '{MAGIC}'",
                env.magic
            )));
        }
        if env.version != VERSION {
            return Err(Error::Envelope(format!(
                "unsupported version {} (supported: {VERSION})",
                env.version
            )));
        }
        Ok(env)
    }

    pub fn save(&self, path: &std::path::Path) -> Result<()> {
        std::fs::write(path, self.to_json()?)
            .map_err(|e| Error::Envelope(format!("writing {}: {e}", path.display())))
    }

    pub fn load(path: &std::path::Path) -> Result<Envelope> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Envelope(format!("reading {}: {e}", path.display())))?;
        Envelope::from_json(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;
    use crate::kpath::SolverConfig;
    use crate::tree_oracle::build_tree_oracle;

    /// The concurrency contract: every oracle is immutable after its build
    /// and safe to query from multiple threads.
    #[test]
    fn oracles_are_send_and_sync() {
        fn check<T: Send + Sync>() {}
        check::<crate::graph::Graph>();
        check::<crate::tree_oracle::FtLookupTree>();
        check::<crate::sampling_oracle::SampledPathOracle>();
        check::<crate::vc::VcSubsetOracle>();
        check::<crate::vc::VcTreeOracle>();
        check::<crate::vc::VcKernelOracle>();
        check::<crate::dso::VcDso>();
        check::<crate::preserver::Preserver>();
        check::<crate::preserver::DetourOracle>();
        check::<crate::reach::FieldMatrixOracle>();
        check::<Envelope>();
    }

    #[test]
    fn json_roundtrip_and_validation() {
        let g = parse_graph("3 2 d\n0 1\n1 2").unwrap();
        let t = build_tree_oracle(&g, 1, 3, &SolverConfig::exhaustive()).unwrap();
        let env = Envelope::new(OraclePayload::KpathTree(t));
        let json = env.to_json().unwrap();
        let back = Envelope::from_json(&json).unwrap();
        assert_eq!(back.payload.kind(), "kpath-tree");

        let bad = json.replace("ftso-oracle", "not-an-oracle");
        assert!(Envelope::from_json(&bad).is_err());
        assert!(Envelope::from_json("{}").is_err());
    }
}
