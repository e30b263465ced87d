//! Lookup of integer sequences against the On-Line Encyclopedia of
//! Integer Sequences, with a content-addressed local cache so repeated
//! queries (and offline runs) never touch the network.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::rational::Int;

/// Environment variable overriding the cache directory.
pub const CACHE_DIR_ENV: &str = "RIORDAN_OEIS_CACHE_DIR";

const DEFAULT_BASE_URL: &str = "https://oeis.org";

/// A sequence to look up. At least four terms are recommended for a
/// meaningful match.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceQuery {
    terms: Vec<Int>,
    max_results: usize,
}

impl SequenceQuery {
    pub fn new(terms: Vec<Int>, max_results: usize) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::EmptyQuery);
        }
        Ok(SequenceQuery {
            terms,
            max_results: max_results.max(1),
        })
    }

    pub fn terms(&self) -> &[Int] {
        &self.terms
    }

    /// The terms as sent to the service: comma-separated, no spaces.
    pub fn terms_string(&self) -> String {
        let parts: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
        parts.join(",")
    }
}

/// One entry returned by a lookup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LookupResult {
    /// OEIS identifier, `A` followed by six digits.
    pub id: String,
    pub name: String,
    /// Length of the longest prefix of the query that appears
    /// contiguously in the entry's listed terms.
    pub matched_prefix_length: usize,
}

/// Client with a local response cache. With a warm cache, lookups are a
/// pure function of the query.
pub struct OeisClient {
    cache_dir: PathBuf,
    offline: bool,
    base_url: String,
}

impl OeisClient {
    /// Cache directory from [`CACHE_DIR_ENV`], falling back to a
    /// directory under the system temp dir.
    pub fn new(offline: bool) -> Self {
        let cache_dir = std::env::var_os(CACHE_DIR_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| std::env::temp_dir().join("riordan-oeis-cache"));
        Self::with_cache_dir(cache_dir, offline)
    }

    pub fn with_cache_dir(cache_dir: PathBuf, offline: bool) -> Self {
        OeisClient {
            cache_dir,
            offline,
            base_url: DEFAULT_BASE_URL.to_string(),
        }
    }

    /// Point the client at a different endpoint (primarily for tests).
    pub fn with_base_url(mut self, base_url: &str) -> Self {
        self.base_url = base_url.trim_end_matches('/').to_string();
        self
    }

    /// Where a query's response body is cached.
    pub fn cache_path(&self, q: &SequenceQuery) -> PathBuf {
        let digest = Sha256::digest(q.terms_string().as_bytes());
        self.cache_dir.join(format!("{digest:x}.json"))
    }

    /// Record a response body for a query, atomically (write a temp file
    /// in the same directory, then rename over the final path).
    pub fn prime_cache(&self, q: &SequenceQuery, body: &str) -> Result<()> {
        fs::create_dir_all(&self.cache_dir)?;
        let path = self.cache_path(q);
        let tmp = self.cache_dir.join(format!(
            ".{}.tmp{}",
            path.file_name().and_then(|n| n.to_str()).unwrap_or("entry"),
            std::process::id()
        ));
        fs::write(&tmp, body)?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }

    /// Look a sequence up, consulting the cache before the network.
    pub fn lookup(&self, q: &SequenceQuery) -> Result<Vec<LookupResult>> {
        if q.terms.is_empty() {
            return Err(Error::EmptyQuery);
        }
        let path = self.cache_path(q);
        let body = if path.is_file() {
            fs::read_to_string(&path)?
        } else if self.offline {
            return Err(Error::NetworkUnavailable(format!(
                "offline mode and no cached response for {}",
                q.terms_string()
            )));
        } else {
            let body = self.fetch(q)?;
            // Only well-formed responses are worth caching.
            parse_response(&body, &q.terms)?;
            self.prime_cache(q, &body)?;
            body
        };
        let mut results = parse_response(&body, &q.terms)?;
        results.truncate(q.max_results);
        Ok(results)
    }

    fn fetch(&self, q: &SequenceQuery) -> Result<String> {
        let url = format!("{}/search?q={}&fmt=json", self.base_url, q.terms_string());
        let response = ureq::get(&url)
            .call()
            .map_err(|e| Error::NetworkUnavailable(e.to_string()))?;
        response
            .into_string()
            .map_err(|e| Error::NetworkUnavailable(e.to_string()))
    }
}

/// Parse a search response body. Accepts both shapes the service has
/// used: a top-level object with a `results` array (possibly null), or a
/// bare array of entries.
fn parse_response(body: &str, terms: &[Int]) -> Result<Vec<LookupResult>> {
    let value: serde_json::Value = serde_json::from_str(body)
        .map_err(|e| Error::MalformedResponse(format!("response is not JSON: {e}")))?;
    let entries = match &value {
        serde_json::Value::Array(a) => a.as_slice(),
        serde_json::Value::Object(o) => match o.get("results") {
            None | Some(serde_json::Value::Null) => &[],
            Some(serde_json::Value::Array(a)) => a.as_slice(),
            Some(other) => {
                return Err(Error::MalformedResponse(format!(
                    "'results' is not an array: {other}"
                )))
            }
        },
        other => {
            return Err(Error::MalformedResponse(format!(
                "unexpected response shape: {other}"
            )))
        }
    };
    let mut out = Vec::with_capacity(entries.len());
    for entry in entries {
        let number = entry
            .get("number")
            .and_then(|n| n.as_u64())
            .ok_or_else(|| Error::MalformedResponse("entry without a number".into()))?;
        let name = entry
            .get("name")
            .and_then(|n| n.as_str())
            .ok_or_else(|| Error::MalformedResponse("entry without a name".into()))?;
        let data: Vec<Int> = entry
            .get("data")
            .and_then(|d| d.as_str())
            .map(|d| {
                d.split(',')
                    .filter_map(|t| t.trim().parse::<Int>().ok())
                    .collect()
            })
            .unwrap_or_default();
        out.push(LookupResult {
            id: format!("A{number:06}"),
            name: name.to_string(),
            matched_prefix_length: matched_prefix_length(terms, &data),
        });
    }
    Ok(out)
}

/// Longest `L` such that the first `L` query terms appear contiguously
/// somewhere in `data`.
fn matched_prefix_length(terms: &[Int], data: &[Int]) -> usize {
    for len in (1..=terms.len().min(data.len())).rev() {
        let prefix = &terms[..len];
        if data.windows(len).any(|w| w == prefix) {
            return len;
        }
    }
    0
}

/// Convenience for reading a committed fixture in tests and tools.
pub fn read_fixture(path: &Path) -> Result<String> {
    Ok(fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&t| int(t)).collect()
    }

    fn fixture_body() -> String {
        let path = Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("tests/fixtures/search_1_1_2_5_14_42.json");
        read_fixture(&path).expect("fixture file is committed")
    }

    #[test]
    fn empty_queries_are_rejected() {
        assert_eq!(
            SequenceQuery::new(vec![], 5).unwrap_err(),
            Error::EmptyQuery
        );
    }

    #[test]
    fn replay_from_committed_fixture_matches_catalan() {
        let dir = tempfile::tempdir().unwrap();
        let client = OeisClient::with_cache_dir(dir.path().to_path_buf(), true);
        let q = SequenceQuery::new(ints(&[1, 1, 2, 5, 14, 42]), 10).unwrap();
        client.prime_cache(&q, &fixture_body()).unwrap();

        let results = client.lookup(&q).unwrap();
        assert!(!results.is_empty());
        assert_eq!(results[0].id, "A000108");
        assert!(results[0].name.contains("Catalan"));
        assert_eq!(results[0].matched_prefix_length, 6);
        // Replay is deterministic.
        assert_eq!(client.lookup(&q).unwrap(), results);
    }

    #[test]
    fn max_results_truncates() {
        let dir = tempfile::tempdir().unwrap();
        let client = OeisClient::with_cache_dir(dir.path().to_path_buf(), true);
        let q = SequenceQuery::new(ints(&[1, 1, 2, 5, 14, 42]), 1).unwrap();
        client.prime_cache(&q, &fixture_body()).unwrap();
        assert_eq!(client.lookup(&q).unwrap().len(), 1);
    }

    #[test]
    fn offline_with_cold_cache_is_a_network_error() {
        let dir = tempfile::tempdir().unwrap();
        let client = OeisClient::with_cache_dir(dir.path().to_path_buf(), true);
        let q = SequenceQuery::new(ints(&[9, 9, 9, 9]), 5).unwrap();
        match client.lookup(&q) {
            Err(Error::NetworkUnavailable(_)) => {}
            other => panic!("expected NetworkUnavailable, got {other:?}"),
        }
    }

    #[test]
    fn malformed_cache_entries_are_reported() {
        let dir = tempfile::tempdir().unwrap();
        let client = OeisClient::with_cache_dir(dir.path().to_path_buf(), true);
        let q = SequenceQuery::new(ints(&[1, 2, 3, 4]), 5).unwrap();
        client.prime_cache(&q, "not json at all").unwrap();
        match client.lookup(&q) {
            Err(Error::MalformedResponse(_)) => {}
            other => panic!("expected MalformedResponse, got {other:?}"),
        }
        client.prime_cache(&q, "{\"results\": 7}").unwrap();
        assert!(matches!(
            client.lookup(&q),
            Err(Error::MalformedResponse(_))
        ));
    }

    #[test]
    fn null_results_mean_no_matches() {
        let dir = tempfile::tempdir().unwrap();
        let client = OeisClient::with_cache_dir(dir.path().to_path_buf(), true);
        let q = SequenceQuery::new(ints(&[1, 2, 3, 4]), 5).unwrap();
        client
            .prime_cache(&q, "{\"results\": null, \"count\": 0}")
            .unwrap();
        assert_eq!(client.lookup(&q).unwrap(), vec![]);
    }

    #[test]
    fn prefix_matching_measures_contiguous_runs() {
        let terms = ints(&[1, 1, 2, 5, 14, 42]);
        assert_eq!(
            matched_prefix_length(&terms, &ints(&[1, 1, 2, 5, 14, 42, 132])),
            6
        );
        assert_eq!(
            matched_prefix_length(&terms, &ints(&[0, 1, 1, 2, 5, 3, 3])),
            4
        );
        assert_eq!(matched_prefix_length(&terms, &ints(&[7, 8, 9])), 0);
        assert_eq!(matched_prefix_length(&terms, &[]), 0);
    }

    #[test]
    fn bare_array_responses_parse() {
        let body = r#"[{"number": 45, "name": "Fibonacci numbers.", "data": "0,1,1,2,3,5,8"}]"#;
        let results = parse_response(body, &ints(&[1, 2, 3])).unwrap();
        assert_eq!(results[0].id, "A000045");
        assert_eq!(results[0].matched_prefix_length, 3);
    }

    /// Live network check; opt in with `cargo test -- --ignored`.
    #[test]
    #[ignore]
    fn live_lookup_finds_catalan() {
        let dir = tempfile::tempdir().unwrap();
        let client = OeisClient::with_cache_dir(dir.path().to_path_buf(), false);
        let q = SequenceQuery::new(ints(&[1, 1, 2, 5, 14, 42]), 10).unwrap();
        let results = client.lookup(&q).unwrap();
        assert!(results.iter().any(|r| r.id == "A000108"));
    }
}
