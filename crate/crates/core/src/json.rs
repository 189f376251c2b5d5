//! JSON documents for labellings and list assignments.
//!
//! Labelling: `{"p": 2, "labels": {"v:0": 0, "e:0-1": 2}}`.
//! Lists: `{"p": 2, "lists": {"v:0": [0, 1], "e:0-1": [2, 3]}}` (`p` optional,
//! `labels` accepted as an alias of `lists` on input).
//! Keys are written in canonical element order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::labelling::{Color, Element, ListAssignment, TotalLabelling};

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let key = String::deserialize(d)?;
        Element::parse_key(&key).ok_or_else(|| de::Error::custom(format!("bad element key `{key}`")))
    }
}

/// Reads a map keyed by element strings into element order.
struct ElementMapVisitor<V>(std::marker::PhantomData<V>);

impl<'de, V: Deserialize<'de>> Visitor<'de> for ElementMapVisitor<V> {
    type Value = BTreeMap<Element, V>;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a map keyed by `v:ID` / `e:U-V`")
    }

    fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Self::Value, A::Error> {
        let mut out = BTreeMap::new();
        while let Some((k, v)) = map.next_entry::<Element, V>()? {
            if out.insert(k, v).is_some() {
                return Err(de::Error::custom(format!("duplicate key {k}")));
            }
        }
        Ok(out)
    }
}

impl Serialize for TotalLabelling {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.len()))?;
        for (x, c) in self.iter() {
            map.serialize_entry(&x, &c)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for TotalLabelling {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let map = d.deserialize_map(ElementMapVisitor::<Color>(Default::default()))?;
        Ok(map.into_iter().collect())
    }
}

impl Serialize for ListAssignment {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.len()))?;
        for (x, l) in self.iter() {
            map.serialize_entry(&x, l)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for ListAssignment {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let map = d.deserialize_map(ElementMapVisitor::<BTreeSet<Color>>(Default::default()))?;
        Ok(map.into_iter().collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabellingDoc {
    pub p: u32,
    pub labels: TotalLabelling,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListsDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    #[serde(alias = "labels")]
    pub lists: ListAssignment,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labelling_keys_in_element_order() {
        let labels: TotalLabelling = [
            (Element::Edge(0, 1), 2),
            (Element::Vertex(10), 4),
            (Element::Vertex(2), 0),
        ]
        .into_iter()
        .collect();
        let doc = LabellingDoc { p: 2, labels };
        let text = serde_json::to_string(&doc).unwrap();
        assert_eq!(text, r#"{"p":2,"labels":{"v:2":0,"v:10":4,"e:0-1":2}}"#);
        let back: LabellingDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
    }

    #[test]
    fn lists_accept_alias_and_reject_bad_keys() {
        let doc: ListsDoc = serde_json::from_str(r#"{"labels":{"v:0":[1,0],"e:1-0":[3]}}"#).unwrap();
        assert_eq!(doc.p, None);
        assert_eq!(doc.lists.get(Element::Edge(0, 1)).unwrap().len(), 1);
        assert_eq!(
            serde_json::to_string(&doc).unwrap(),
            r#"{"lists":{"v:0":[0,1],"e:0-1":[3]}}"#
        );
        assert!(serde_json::from_str::<ListsDoc>(r#"{"lists":{"x:0":[1]}}"#).is_err());
    }
}
