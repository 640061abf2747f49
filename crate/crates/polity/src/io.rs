//! JSON formats for sites, formations, maps, and seat distributions.
//!
//! Saving is canonical: profile keys in base order, states in ground
//! order, coalitions in display order. Saving a loaded file and saving it
//! again is byte-identical. Loaders report the JSON path of the first
//! offending element.

use serde_json::{json, Map, Value};

use crate::combinatorics::{Base, BaseMap, Complex};
use crate::error::Error;
use crate::morphism::PairMap;
use crate::site::{Dimension, Ground, GroundMap, PSite, StateSet};
use crate::voting::WeightProfile;
use crate::Result;

fn as_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::schema(path, "expected an object"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::schema(path, "expected an array"))
}

fn as_str<'a>(v: &'a Value, path: &str) -> Result<&'a str> {
    v.as_str()
        .ok_or_else(|| Error::schema(path, "expected a string"))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| Error::schema(path, format!("missing field `{key}`")))
}

fn reject_unknown(obj: &Map<String, Value>, allowed: &[&str], path: &str) -> Result<()> {
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(Error::schema(format!("{path}.{key}"), "unknown field"));
        }
    }
    Ok(())
}

fn string_list(v: &Value, path: &str) -> Result<Vec<String>> {
    let arr = as_array(v, path)?;
    arr.iter()
        .enumerate()
        .map(|(k, item)| Ok(as_str(item, &format!("{path}[{k}]"))?.to_string()))
        .collect()
}

fn parse_base(v: &Value, path: &str) -> Result<Base> {
    Base::new(string_list(v, path)?).map_err(|e| Error::schema(path, e.to_string()))
}

fn parse_ground(v: &Value, path: &str) -> Result<Ground> {
    let obj = as_object(v, path)?;
    reject_unknown(obj, &["states", "product"], path)?;
    match (obj.get("states"), obj.get("product")) {
        (Some(states), None) => Ground::flat(string_list(states, &format!("{path}.states"))?)
            .map_err(|e| Error::schema(format!("{path}.states"), e.to_string())),
        (None, Some(product)) => {
            let ppath = format!("{path}.product");
            let pobj = as_object(product, &ppath)?;
            reject_unknown(pobj, &["dims"], &ppath)?;
            let dims_val = field(pobj, "dims", &ppath)?;
            let dims_path = format!("{ppath}.dims");
            let dims = as_array(dims_val, &dims_path)?
                .iter()
                .enumerate()
                .map(|(k, d)| {
                    let dpath = format!("{dims_path}[{k}]");
                    let dobj = as_object(d, &dpath)?;
                    reject_unknown(dobj, &["name", "values"], &dpath)?;
                    let name = as_str(field(dobj, "name", &dpath)?, &format!("{dpath}.name"))?;
                    let values =
                        string_list(field(dobj, "values", &dpath)?, &format!("{dpath}.values"))?;
                    Dimension::new(name, values).map_err(|e| Error::schema(&dpath, e.to_string()))
                })
                .collect::<Result<Vec<_>>>()?;
            Ground::product(dims).map_err(|e| Error::schema(&ppath, e.to_string()))
        }
        _ => Err(Error::schema(
            path,
            "expected exactly one of `states` or `product`",
        )),
    }
}

fn parse_aspirations(v: &Value, ground: &Ground, path: &str) -> Result<StateSet> {
    let arr = as_array(v, path)?;
    let mut set = ground.empty_set();
    for (k, term) in arr.iter().enumerate() {
        let tpath = format!("{path}[{k}]");
        match term {
            Value::String(label) => {
                let idx = ground
                    .index_of(label)
                    .ok_or_else(|| Error::schema(&tpath, format!("unknown state `{label}`")))?;
                set.insert(idx);
            }
            Value::Object(box_obj) => {
                let mut selection: Vec<(&str, Vec<&str>)> = Vec::new();
                for (dim, values) in box_obj {
                    let vpath = format!("{tpath}.{dim}");
                    let list = as_array(values, &vpath)?
                        .iter()
                        .enumerate()
                        .map(|(j, v)| as_str(v, &format!("{vpath}[{j}]")))
                        .collect::<Result<Vec<_>>>()?;
                    selection.push((dim.as_str(), list));
                }
                let states = ground
                    .box_set(&selection)
                    .map_err(|e| Error::schema(&tpath, e.to_string()))?;
                set = set.union(&states);
            }
            _ => return Err(Error::schema(&tpath, "expected a state id or a box object")),
        }
    }
    Ok(set)
}

/// Parses a site document.
pub fn parse_site(text: &str) -> Result<PSite> {
    let root: Value = serde_json::from_str(text)?;
    let obj = as_object(&root, "$")?;
    reject_unknown(obj, &["base", "ground", "profile"], "$")?;
    let base = parse_base(field(obj, "base", "$")?, "base")?;
    let ground = parse_ground(field(obj, "ground", "$")?, "ground")?;
    let profile_obj = as_object(field(obj, "profile", "$")?, "profile")?;
    for key in profile_obj.keys() {
        if base.index_of(key).is_none() {
            return Err(Error::schema(format!("profile.{key}"), "unknown agent"));
        }
    }
    let profile = base
        .agents()
        .iter()
        .map(|agent| {
            let path = format!("profile.{agent}");
            let entry = profile_obj
                .get(agent)
                .ok_or_else(|| Error::schema(&path, "missing agent entry"))?;
            parse_aspirations(entry, &ground, &path)
        })
        .collect::<Result<Vec<_>>>()?;
    PSite::new(base, ground, profile)
}

fn ground_value(ground: &Ground) -> Value {
    match ground.dimensions() {
        Some(dims) => {
            let dims_json: Vec<Value> = dims
                .iter()
                .map(|d| json!({"name": d.name(), "values": d.values()}))
                .collect();
            json!({"product": {"dims": dims_json}})
        }
        None => json!({"states": ground.states()}),
    }
}

/// The canonical JSON value of a site; boxes are expanded to explicit
/// state lists.
pub fn site_value(site: &PSite) -> Value {
    let mut profile = Map::new();
    for (i, agent) in site.base().agents().iter().enumerate() {
        profile.insert(
            agent.clone(),
            Value::Array(
                site.aspirations(i)
                    .labels(site.ground())
                    .into_iter()
                    .map(|l| Value::String(l.to_string()))
                    .collect(),
            ),
        );
    }
    json!({
        "base": site.base().agents(),
        "ground": ground_value(site.ground()),
        "profile": Value::Object(profile),
    })
}

/// Renders a site document.
pub fn render_site(site: &PSite) -> String {
    pretty(&site_value(site))
}

/// Parses a formation document; `[]` is the empty coalition.
pub fn parse_formation(text: &str) -> Result<Complex> {
    let root: Value = serde_json::from_str(text)?;
    let obj = as_object(&root, "$")?;
    reject_unknown(obj, &["base", "complex"], "$")?;
    let base = parse_base(field(obj, "base", "$")?, "base")?;
    let coalitions = as_array(field(obj, "complex", "$")?, "complex")?
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let cpath = format!("complex[{k}]");
            let labels = string_list(c, &cpath)?;
            base.coalition(labels.iter().map(String::as_str))
                .map_err(|e| Error::schema(&cpath, e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    Complex::new(base, coalitions)
}

/// The canonical JSON value of a formation, coalitions in display order.
pub fn formation_value(complex: &Complex) -> Value {
    let coalitions: Vec<Value> = complex
        .coalitions()
        .map(|c| {
            Value::Array(
                c.labels(complex.base())
                    .into_iter()
                    .map(|l| Value::String(l.to_string()))
                    .collect(),
            )
        })
        .collect();
    json!({
        "base": complex.base().agents(),
        "complex": coalitions,
    })
}

/// Renders a formation document.
pub fn render_formation(complex: &Complex) -> String {
    pretty(&formation_value(complex))
}

fn parse_assignment_object(v: &Value, path: &str) -> Result<Vec<(String, String)>> {
    let obj = as_object(v, path)?;
    obj.iter()
        .map(|(from, to)| {
            Ok((
                from.clone(),
                as_str(to, &format!("{path}.{from}"))?.to_string(),
            ))
        })
        .collect()
}

/// Parses the base component of a map document against the given bases.
/// An omitted `base_map` is the identity and requires equal bases.
pub fn parse_base_map(text: &str, domain: &Base, codomain: &Base) -> Result<BaseMap> {
    let root: Value = serde_json::from_str(text)?;
    let obj = as_object(&root, "$")?;
    reject_unknown(obj, &["base_map", "ground_map"], "$")?;
    base_map_from(obj, domain, codomain)
}

fn base_map_from(obj: &Map<String, Value>, domain: &Base, codomain: &Base) -> Result<BaseMap> {
    match obj.get("base_map") {
        Some(v) => {
            let pairs = parse_assignment_object(v, "base_map")?;
            BaseMap::from_pairs(
                domain.clone(),
                codomain.clone(),
                pairs.iter().map(|(f, t)| (f.as_str(), t.as_str())),
            )
        }
        None => {
            if domain != codomain {
                return Err(Error::schema(
                    "base_map",
                    "omitted, but the two bases differ",
                ));
            }
            Ok(BaseMap::identity(domain))
        }
    }
}

fn ground_map_from(
    obj: &Map<String, Value>,
    domain: &Ground,
    codomain: &Ground,
) -> Result<GroundMap> {
    match obj.get("ground_map") {
        Some(v) => {
            let pairs = parse_assignment_object(v, "ground_map")?;
            GroundMap::from_pairs(
                domain.clone(),
                codomain.clone(),
                pairs.iter().map(|(f, t)| (f.as_str(), t.as_str())),
            )
        }
        None => {
            if domain != codomain {
                return Err(Error::schema(
                    "ground_map",
                    "omitted, but the two grounds differ",
                ));
            }
            Ok(GroundMap::identity(domain))
        }
    }
}

/// Parses a map document against two sites; omitted components are
/// identities and require matching universes.
pub fn parse_pair_map(text: &str, a: &PSite, b: &PSite) -> Result<PairMap> {
    let root: Value = serde_json::from_str(text)?;
    let obj = as_object(&root, "$")?;
    reject_unknown(obj, &["base_map", "ground_map"], "$")?;
    Ok(PairMap::new(
        base_map_from(obj, a.base(), b.base())?,
        ground_map_from(obj, a.ground(), b.ground())?,
    ))
}

/// Parses the ground component of a map document against two grounds.
pub fn parse_ground_map(text: &str, domain: &Ground, codomain: &Ground) -> Result<GroundMap> {
    let root: Value = serde_json::from_str(text)?;
    let obj = as_object(&root, "$")?;
    reject_unknown(obj, &["base_map", "ground_map"], "$")?;
    ground_map_from(obj, domain, codomain)
}

fn base_map_value(map: &BaseMap) -> Value {
    let mut obj = Map::new();
    for (i, agent) in map.domain().agents().iter().enumerate() {
        obj.insert(
            agent.clone(),
            Value::String(map.codomain().agent(map.apply(i)).to_string()),
        );
    }
    Value::Object(obj)
}

fn ground_map_value(map: &GroundMap) -> Value {
    let mut obj = Map::new();
    for (x, state) in map.domain().states().iter().enumerate() {
        obj.insert(
            state.clone(),
            Value::String(map.codomain().state(map.apply(x)).to_string()),
        );
    }
    Value::Object(obj)
}

/// Renders a full pair map document.
pub fn render_pair_map(map: &PairMap) -> String {
    let doc = json!({
        "base_map": base_map_value(map.base_map()),
        "ground_map": ground_map_value(map.ground_map()),
    });
    pretty(&doc)
}

/// Renders a ground-map-only document, the output shape of witness
/// searches.
pub fn render_ground_map(map: &GroundMap) -> String {
    let doc = json!({ "ground_map": ground_map_value(map) });
    pretty(&doc)
}

/// Renders a base-map-only document.
pub fn render_base_map(map: &BaseMap) -> String {
    let doc = json!({ "base_map": base_map_value(map) });
    pretty(&doc)
}

/// Parses a seat-distribution document.
pub fn parse_weights(text: &str) -> Result<WeightProfile> {
    let root: Value = serde_json::from_str(text)?;
    let obj = as_object(&root, "$")?;
    reject_unknown(obj, &["weights", "quota"], "$")?;
    let weights_obj = as_object(field(obj, "weights", "$")?, "weights")?;
    let weights = weights_obj
        .iter()
        .map(|(agent, v)| {
            let path = format!("weights.{agent}");
            let seats = v
                .as_u64()
                .ok_or_else(|| Error::schema(&path, "expected a nonnegative integer"))?;
            Ok((agent.clone(), seats))
        })
        .collect::<Result<Vec<_>>>()?;
    let quota = field(obj, "quota", "$")?
        .as_u64()
        .ok_or_else(|| Error::schema("quota", "expected a positive integer"))?;
    WeightProfile::new(weights, quota)
}

/// Renders a seat-distribution document.
pub fn render_weights(w: &WeightProfile) -> String {
    let mut weights = Map::new();
    for (agent, seats) in w.weights() {
        weights.insert(agent.clone(), json!(seats));
    }
    let doc = json!({
        "weights": Value::Object(weights),
        "quota": w.quota(),
    });
    pretty(&doc)
}

/// DOT rendering of a nerve: vertices as nodes, pairs as edges, larger
/// simplexes listed as comments.
pub fn render_nerve_dot(nerve: &crate::combinatorics::SimplicialComplex) -> String {
    let base = nerve.base();
    let mut out = String::from("graph nerve {\n");
    for c in nerve.coalitions() {
        let labels = c.labels(base);
        match labels.len() {
            1 => out.push_str(&format!("  \"{}\";\n", labels[0])),
            2 => out.push_str(&format!("  \"{}\" -- \"{}\";\n", labels[0], labels[1])),
            _ => out.push_str(&format!("  // simplex {}\n", labels.join(", "))),
        }
    }
    out.push_str("}\n");
    out
}

fn pretty(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializing plain JSON");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn site_round_trip_is_byte_identical() {
        for site in [
            fixtures::gallopolis(),
            fixtures::triangle_left(),
            fixtures::delegation_site(),
        ] {
            let once = render_site(&site);
            let reloaded = parse_site(&once).unwrap();
            assert_eq!(reloaded, site);
            assert_eq!(render_site(&reloaded), once);
        }
    }

    #[test]
    fn gallopolis_loads_from_boxes() {
        let text = r#"{
            "base": ["LEFT", "SOCD", "CONS", "LIBER", "RIGHT"],
            "ground": {"product": {"dims": [
                {"name": "E", "values": ["1", "2", "3"]},
                {"name": "S", "values": ["l", "n", "c"]},
                {"name": "O", "values": ["alpha", "beta", "gamma"]}
            ]}},
            "profile": {
                "LEFT":  [{"E": ["2", "3"], "S": ["l"], "O": ["gamma"]}],
                "SOCD":  [{"E": ["2"], "S": ["l", "n"], "O": ["beta", "gamma"]}],
                "CONS":  [{"E": ["1", "2"], "S": ["n", "c"], "O": ["alpha", "beta"]}],
                "LIBER": [{"E": ["1"], "S": ["l"]},
                          {"E": ["1"], "S": ["n"], "O": ["beta", "gamma"]}],
                "RIGHT": [{"E": ["1", "2"], "S": ["c"], "O": ["alpha"]}]
            }
        }"#;
        // The first LIBER box omits O entirely: full range.
        let parsed = parse_site(text).unwrap();
        assert_eq!(parsed, fixtures::gallopolis());
    }

    #[test]
    fn schema_errors_carry_paths() {
        let bad_profile = r#"{
            "base": ["a"],
            "ground": {"states": ["x"]},
            "profile": {"a": ["y"]}
        }"#;
        match parse_site(bad_profile) {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "profile.a[0]"),
            other => panic!("expected a schema error, got {other:?}"),
        }
        let unknown_agent = r#"{
            "base": ["a"],
            "ground": {"states": ["x"]},
            "profile": {"a": [], "b": []}
        }"#;
        match parse_site(unknown_agent) {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "profile.b"),
            other => panic!("expected a schema error, got {other:?}"),
        }
    }

    #[test]
    fn formation_round_trip() {
        let structure = fixtures::delegation_structure();
        let text = render_formation(structure.complex());
        let reloaded = parse_formation(&text).unwrap();
        assert_eq!(&reloaded, structure.complex());
        assert_eq!(render_formation(&reloaded), text);
        // The empty coalition is representable.
        let with_empty = r#"{"base": ["a"], "complex": [[], ["a"]]}"#;
        let parsed = parse_formation(with_empty).unwrap();
        assert!(parsed.contains(crate::combinatorics::Coalition::EMPTY));
    }

    #[test]
    fn maps_default_to_identity() {
        let a = fixtures::triangle_left();
        let m = parse_pair_map("{}", &a, &a).unwrap();
        assert_eq!(m, PairMap::identity(&a));
        // Differing universes reject the omission.
        let b = fixtures::gallopolis();
        assert!(parse_pair_map("{}", &a, &b).is_err());
    }

    #[test]
    fn explicit_map_round_trip() {
        let a = fixtures::triangle_left();
        let m = PairMap::identity(&a);
        let text = render_pair_map(&m);
        assert_eq!(parse_pair_map(&text, &a, &a).unwrap(), m);
    }

    #[test]
    fn weights_round_trip_and_bounds() {
        let w = fixtures::gallopolis_weights();
        let text = render_weights(&w);
        assert_eq!(parse_weights(&text).unwrap(), w);
        assert!(parse_weights(r#"{"weights": {"a": 1}, "quota": 0}"#).is_err());
        assert!(parse_weights(r#"{"weights": {"a": 1}, "quota": 2}"#).is_err());
    }

    #[test]
    fn nerve_dot_lists_vertices_and_edges() {
        let dot = render_nerve_dot(&fixtures::triangle_left().nerve());
        assert!(dot.contains("\"1\" -- \"2\""));
        assert!(dot.contains("graph nerve"));
    }
}
