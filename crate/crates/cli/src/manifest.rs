//! Run manifest: what was asked, what was produced, how it went.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

#[derive(Debug, Clone)]
pub struct RunManifest {
    pub run_id: String,
    pub status: Status,
    pub wall_time_seconds: f64,
    pub config: BTreeMap<String, String>,
    /// relative paths of every emitted file (the manifest itself excluded)
    pub artifacts: Vec<String>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone)]
pub enum Status {
    Completed,
    Failed(String),
}

fn fnv64(text: &str) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for b in text.as_bytes() {
        hash ^= *b as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

/// `"<unix seconds>-<16-hex config hash>"`.
pub fn make_run_id(config: &BTreeMap<String, String>) -> String {
    let seconds = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    let canonical: String = config
        .iter()
        .map(|(k, v)| format!("{}={}\n", k, v))
        .collect();
    format!("{}-{:016x}", seconds, fnv64(&canonical))
}

impl RunManifest {
    pub fn to_json(&self) -> String {
        let mut root = serde_json::Map::new();
        root.insert("run_id".into(), self.run_id.clone().into());
        root.insert(
            "status".into(),
            match &self.status {
                Status::Completed => "completed".to_string().into(),
                Status::Failed(reason) => format!("failed: {}", reason).into(),
            },
        );
        root.insert("wall_time_seconds".into(), self.wall_time_seconds.into());
        let config: serde_json::Map<String, serde_json::Value> = self
            .config
            .iter()
            .map(|(k, v)| (k.clone(), serde_json::Value::from(v.clone())))
            .collect();
        root.insert("config".into(), config.into());
        root.insert(
            "artifacts".into(),
            self.artifacts
                .iter()
                .map(|a| serde_json::Value::from(a.clone()))
                .collect::<Vec<_>>()
                .into(),
        );
        root.insert(
            "notes".into(),
            self.notes
                .iter()
                .map(|n| serde_json::Value::from(n.clone()))
                .collect::<Vec<_>>()
                .into(),
        );
        serde_json::to_string_pretty(&serde_json::Value::Object(root)).expect("valid json")
    }

    pub fn write(&self, out_dir: &Path) -> std::io::Result<()> {
        std::fs::write(out_dir.join("manifest.json"), self.to_json())
    }
}
