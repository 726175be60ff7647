//! The on-disk JSON format for rooted trivalent maps.
//!
//! ```json
//! {"darts":[0,1,2,3],"v":[[0],[1,2,3]],"e":[[0,1],[2,3]],"root":0,"boundary":[]}
//! ```
//!
//! `darts` is sorted ascending; `v` and `e` list every cycle with fixed
//! points as singletons, each cycle rotated to start at its smallest dart and
//! the cycles ordered by that dart. Serialization always emits this canonical
//! shape, so emit ∘ parse ∘ emit is byte-stable.

use serde::{Deserialize, Serialize};

use super::{Dart, MapError, RootedTrivalentMap};

#[derive(Serialize, Deserialize)]
struct MapJson {
    darts: Vec<u32>,
    v: Vec<Vec<u32>>,
    e: Vec<Vec<u32>>,
    root: u32,
    boundary: Vec<u32>,
}

impl RootedTrivalentMap {
    pub fn to_json(&self) -> String {
        let cycles = |cs: Vec<Vec<Dart>>| -> Vec<Vec<u32>> {
            cs.into_iter().map(|c| c.into_iter().map(|d| d.0).collect()).collect()
        };
        let doc = MapJson {
            darts: self.darts().iter().map(|d| d.0).collect(),
            v: cycles(self.v_cycles()),
            e: cycles(self.e_cycles()),
            root: self.root().0,
            boundary: self.boundary().iter().map(|d| d.0).collect(),
        };
        serde_json::to_string(&doc).expect("map JSON serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, MapError> {
        let doc: MapJson = serde_json::from_str(text).map_err(|err| MapError::Json(err.to_string()))?;
        let darts: Vec<Dart> = doc.darts.into_iter().map(Dart).collect();
        let cycles = |cs: Vec<Vec<u32>>| -> Vec<Vec<Dart>> {
            cs.into_iter().map(|c| c.into_iter().map(Dart).collect()).collect()
        };
        RootedTrivalentMap::from_cycles(
            darts,
            &cycles(doc.v),
            &cycles(doc.e),
            Dart(doc.root),
            doc.boundary.into_iter().map(Dart).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip_is_lossless_and_stable() {
        let m = RootedTrivalentMap::from_cycles(
            vec![Dart(7), Dart(1), Dart(4), Dart(9)],
            &[vec![Dart(1), Dart(4), Dart(9)], vec![Dart(7)]],
            &[vec![Dart(7), Dart(1)], vec![Dart(4), Dart(9)]],
            Dart(7),
            vec![],
        )
        .unwrap();
        let text = m.to_json();
        let back = RootedTrivalentMap::from_json(&text).unwrap();
        assert_eq!(m, back);
        assert_eq!(back.to_json(), text);
        assert_eq!(
            text,
            r#"{"darts":[1,4,7,9],"v":[[1,4,9],[7]],"e":[[1,7],[4,9]],"root":7,"boundary":[]}"#
        );
    }

    #[test]
    fn trivial_map_json() {
        let text = r#"{"darts":[0],"v":[[0]],"e":[[0]],"root":0,"boundary":[0]}"#;
        let m = RootedTrivalentMap::from_json(text).unwrap();
        assert_eq!(m.to_json(), text);
        assert_eq!(m.boundary(), vec![Dart(0)]);
    }

    #[test]
    fn bad_json_is_reported() {
        assert!(matches!(RootedTrivalentMap::from_json("{"), Err(MapError::Json(_))));
        // structurally valid JSON, semantically broken map
        let text = r#"{"darts":[0,1],"v":[[0],[1]],"e":[[0,1]],"root":0,"boundary":[]}"#;
        assert!(RootedTrivalentMap::from_json(text).is_err());
    }
}
