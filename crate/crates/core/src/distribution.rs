//! Exact-integer histograms of a statistic over a finite family of objects.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::identity::{decimal, ExactInt};

/// Histogram mapping a statistic value to the number of objects attaining it.
///
/// Buckets never hold a zero count, so two distributions compare equal
/// exactly when they agree bucket by bucket.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Distribution {
    buckets: BTreeMap<i64, ExactInt>,
    total: ExactInt,
}

impl Distribution {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `count` objects with statistic value `key`.
    pub fn add(&mut self, key: i64, count: impl Into<ExactInt>) {
        let count = count.into();
        assert!(count >= ExactInt::zero(), "negative bucket count");
        if count.is_zero() {
            return;
        }
        self.total += &count;
        *self.buckets.entry(key).or_insert_with(ExactInt::zero) += count;
    }

    pub fn increment(&mut self, key: i64) {
        self.add(key, ExactInt::one());
    }

    /// Sums two histograms bucket by bucket.
    pub fn merge(mut self, other: Distribution) -> Distribution {
        for (key, count) in other.buckets {
            self.add(key, count);
        }
        self
    }

    /// Count stored at `key`, zero when the bucket is absent.
    pub fn get(&self, key: i64) -> ExactInt {
        self.buckets
            .get(&key)
            .cloned()
            .unwrap_or_else(ExactInt::zero)
    }

    pub fn total(&self) -> &ExactInt {
        &self.total
    }

    pub fn len(&self) -> usize {
        self.buckets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.buckets.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &ExactInt)> + '_ {
        self.buckets.iter().map(|(k, v)| (*k, v))
    }

    pub fn keys(&self) -> impl Iterator<Item = i64> + '_ {
        self.buckets.keys().copied()
    }

    /// Relabels every bucket through `f`; buckets sent to the same key merge.
    pub fn reindex(&self, f: impl Fn(i64) -> i64) -> Distribution {
        let mut out = Distribution::new();
        for (key, count) in &self.buckets {
            out.add(f(*key), count.clone());
        }
        out
    }

    /// Keys whose counts differ between the two histograms, ascending.
    pub fn differing_keys(&self, other: &Distribution) -> Vec<i64> {
        let mut keys: Vec<i64> = self.keys().chain(other.keys()).collect();
        keys.sort_unstable();
        keys.dedup();
        keys.retain(|k| self.get(*k) != other.get(*k));
        keys
    }
}

impl FromIterator<(i64, u64)> for Distribution {
    fn from_iter<I: IntoIterator<Item = (i64, u64)>>(iter: I) -> Self {
        let mut d = Distribution::new();
        for (key, count) in iter {
            d.add(key, count);
        }
        d
    }
}

impl fmt::Display for Distribution {
    /// `{4:1, 5:4, 6:10}`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (key, count)) in self.buckets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{key}:{count}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Serialize, Deserialize)]
struct BucketRepr {
    value: i64,
    #[serde(with = "decimal")]
    count: ExactInt,
}

#[derive(Serialize, Deserialize)]
struct DistributionRepr {
    buckets: Vec<BucketRepr>,
    #[serde(with = "decimal")]
    total: ExactInt,
}

impl Serialize for Distribution {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        DistributionRepr {
            buckets: self
                .buckets
                .iter()
                .map(|(k, v)| BucketRepr {
                    value: *k,
                    count: v.clone(),
                })
                .collect(),
            total: self.total.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Distribution {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = DistributionRepr::deserialize(deserializer)?;
        let mut d = Distribution::new();
        for b in repr.buckets {
            if b.count <= ExactInt::zero() {
                return Err(de::Error::custom(format!(
                    "bucket {} has non-positive count",
                    b.value
                )));
            }
            if d.buckets.contains_key(&b.value) {
                return Err(de::Error::custom(format!("duplicate bucket {}", b.value)));
            }
            d.add(b.value, b.count);
        }
        if d.total != repr.total {
            return Err(de::Error::custom("total does not equal the sum of buckets"));
        }
        Ok(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_counts_are_dropped() {
        let mut d = Distribution::new();
        d.add(3, 0u64);
        assert!(d.is_empty());
        assert_eq!(d.total(), &ExactInt::zero());
    }

    #[test]
    fn reindex_merges_colliding_buckets() {
        let d: Distribution = [(0, 1), (1, 2), (2, 3)].into_iter().collect();
        let folded = d.reindex(|k| k / 2);
        assert_eq!(folded.get(0), ExactInt::from(3));
        assert_eq!(folded.get(1), ExactInt::from(3));
        assert_eq!(folded.total(), d.total());
    }

    #[test]
    fn display_is_sorted() {
        let d: Distribution = [(7, 12), (4, 1), (6, 10), (5, 4)].into_iter().collect();
        assert_eq!(d.to_string(), "{4:1, 5:4, 6:10, 7:12}");
    }

    #[test]
    fn json_uses_decimal_strings() {
        let d: Distribution = [(2, 1)].into_iter().collect();
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(json, r#"{"buckets":[{"value":2,"count":"1"}],"total":"1"}"#);
        let back: Distribution = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn rejects_inconsistent_total() {
        let bad = r#"{"buckets":[{"value":2,"count":"1"}],"total":"2"}"#;
        assert!(serde_json::from_str::<Distribution>(bad).is_err());
        let zero = r#"{"buckets":[{"value":2,"count":"0"}],"total":"0"}"#;
        assert!(serde_json::from_str::<Distribution>(zero).is_err());
    }
}
