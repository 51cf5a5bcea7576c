//! Named machines and group data.
//!
//! Machine sources: `builtin:NAME`, `data:SELECTOR` or a path to an
//! automaton file. Data selectors:
//!
//! | selector | group |
//! |---|---|
//! | `z` | `Z`, the adding machine |
//! | `zomega[:n=5]` | `Z^(w)` cut off after `n` generators |
//! | `zl-wr-zd:l=L,d=D` | `Z^L wr Z^D` |
//! | `cp-wr-z2:p=P[,order=inverses]` | `C_P wr Z^2` |
//! | `zwrz` | `Z wr Z` |
//! | `zwrz-wr-c2` | `(Z wr Z) wr C_2` |
//! | `lamplighter:B=K1,..,Kr` | `(C_K1 + .. + C_Kr) wr Z` |
//! | `concat:SEL+SEL` | concatenation of two wreath data over the same top |

use std::sync::{Arc, OnceLock};

use crate::engine::{concatenate, GData, GroupModel, Representation, SeqModel, WordDictionary, WreathByK};
use crate::error::{Error, Result};
use crate::handle::{machine_handle, ActionHandle, Handle};
use crate::mealy;
use crate::models::{
    adding_data, lamplighter_data, prop31_data, thmd_data, zomega_data, zwrz_data, zwrz_wr_c2_data,
    Ordering, WreathModel, ZModel,
};
use crate::tree::{SelfSimilarMachine, TreeAction};

/// Group data of any of the built-in model types.
pub enum Data {
    Z(GData<ZModel>),
    Seq(GData<SeqModel<ZModel>>),
    Wreath(GData<WreathModel>),
    WreathK(GData<WreathByK<WreathModel>>),
}

pub fn selector_names() -> &'static [&'static str] {
    &[
        "z",
        "zomega[:n=N]",
        "zl-wr-zd:l=L,d=D",
        "cp-wr-z2:p=P[,order=powers|inverses]",
        "zwrz",
        "zwrz-wr-c2",
        "lamplighter:B=K1,..,Kr",
        "concat:SEL+SEL",
    ]
}

struct Params<'a> {
    selector: &'a str,
    pairs: Vec<(String, String)>,
}

impl<'a> Params<'a> {
    /// `k=v,k=v`; a piece without `=` continues the previous value.
    fn parse(selector: &'a str, text: &str) -> Result<Self> {
        let mut pairs: Vec<(String, String)> = Vec::new();
        for piece in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match piece.split_once('=') {
                Some((k, v)) => pairs.push((k.trim().to_string(), v.trim().to_string())),
                None => match pairs.last_mut() {
                    Some((_, v)) => {
                        v.push(',');
                        v.push_str(piece);
                    }
                    None => return Err(Error::BadParams(format!("bad parameters in `{selector}`"))),
                },
            }
        }
        Ok(Params { selector, pairs })
    }

    fn allow(&self, keys: &[&str]) -> Result<()> {
        for (k, _) in &self.pairs {
            if !keys.contains(&k.as_str()) {
                return Err(Error::BadParams(format!("unknown parameter `{k}` in `{}`", self.selector)));
            }
        }
        Ok(())
    }

    fn get(&self, key: &str) -> Option<&str> {
        self.pairs.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    fn usize(&self, key: &str, default: Option<usize>) -> Result<usize> {
        match self.get(key) {
            Some(v) => v
                .parse()
                .map_err(|_| Error::BadParams(format!("`{key}` must be a non-negative integer, got `{v}`"))),
            None => default.ok_or_else(|| Error::BadParams(format!("`{}` needs `{key}=`", self.selector))),
        }
    }
}

/// Resolves a data selector.
pub fn data(selector: &str) -> Result<Data> {
    let selector = selector.trim();
    let (name, rest) = selector.split_once(':').unwrap_or((selector, ""));
    if name == "concat" {
        let (a, b) = rest
            .split_once('+')
            .ok_or_else(|| Error::BadParams("concat needs `SEL+SEL`".into()))?;
        return match (data(a)?, data(b)?) {
            (Data::Wreath(d1), Data::Wreath(d2)) => Ok(Data::Wreath(concatenate(&d1, &d2)?)),
            _ => Err(Error::BadParams("concat needs two wreath product data".into())),
        };
    }
    let params = Params::parse(selector, rest)?;
    let out = match name {
        "z" => {
            params.allow(&[])?;
            Data::Z(adding_data("a"))
        }
        "zomega" => {
            params.allow(&["n"])?;
            let n = params.usize("n", Some(5))?;
            if n == 0 {
                return Err(Error::BadParams("zomega needs n >= 1".into()));
            }
            Data::Seq(zomega_data(n))
        }
        "zl-wr-zd" => {
            params.allow(&["l", "d"])?;
            Data::Wreath(prop31_data(params.usize("l", None)?, params.usize("d", None)?)?)
        }
        "cp-wr-z2" => {
            params.allow(&["p", "order"])?;
            let ordering = match params.get("order").unwrap_or("powers") {
                "powers" => Ordering::Powers,
                "inverses" => Ordering::Inverses,
                o => return Err(Error::BadParams(format!("unknown order `{o}`"))),
            };
            Data::Wreath(thmd_data(params.usize("p", None)?, ordering)?)
        }
        "zwrz" => {
            params.allow(&[])?;
            Data::Wreath(zwrz_data())
        }
        "zwrz-wr-c2" => {
            params.allow(&[])?;
            Data::WreathK(zwrz_wr_c2_data())
        }
        "lamplighter" => {
            params.allow(&["B"])?;
            let b = params.get("B").unwrap_or("2");
            let torsion = b
                .split(',')
                .map(|k| {
                    k.trim()
                        .parse::<i64>()
                        .ok()
                        .filter(|&k| k >= 2)
                        .ok_or_else(|| Error::BadParams(format!("bad cyclic order `{k}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            Data::Wreath(lamplighter_data(torsion)?)
        }
        _ => return Err(Error::UnknownBuiltin(selector.to_string())),
    };
    Ok(out)
}

fn engine_handle<M: GroupModel + 'static>(d: GData<M>) -> Result<Box<dyn ActionHandle>> {
    let rep = Representation::new(d)?;
    let dict: Arc<OnceLock<WordDictionary<M::Elem>>> = Arc::new(OnceLock::new());
    Ok(Box::new(Handle::new(rep, move |rep: &Representation<M>, s: &M::Elem| {
        let dict = dict.get_or_init(|| WordDictionary::new(rep, 4, 3));
        match dict.word(s) {
            Some(w) => w.display(dict.names()).to_string(),
            None => rep.describe(s),
        }
    })))
}

impl Data {
    /// The representation, after a sampled validation of the data.
    pub fn into_handle(self) -> Result<Box<dyn ActionHandle>> {
        match self {
            Data::Z(d) => engine_handle(d),
            Data::Seq(d) => engine_handle(d),
            Data::Wreath(d) => engine_handle(d),
            Data::WreathK(d) => engine_handle(d),
        }
    }
}

pub fn data_handle(selector: &str) -> Result<Box<dyn ActionHandle>> {
    data(selector)?.into_handle()
}

/// Built-in machines: the automata of [`mealy::builtin`] plus
/// `thmD-engine(p)`, the machine derived from `cp-wr-z2:p=P`.
pub fn builtin_machine(name: &str) -> Result<SelfSimilarMachine> {
    let (stem, args) = mealy::split_call(name)?;
    if stem == "thmD-engine" {
        let [p] = args[..] else {
            return Err(Error::BadParams("`thmD-engine` takes 1 argument".into()));
        };
        let rep = Representation::new(thmd_data(p, Ordering::Powers)?)?;
        return crate::engine::to_word_machine(&rep);
    }
    Ok(mealy::builtin(name)?.machine())
}

/// Resolves `builtin:NAME`, `data:SELECTOR` or an automaton file path.
pub fn machine(source: &str) -> Result<Box<dyn ActionHandle>> {
    if let Some(name) = source.strip_prefix("builtin:") {
        return Ok(Box::new(machine_handle(builtin_machine(name)?)));
    }
    if let Some(sel) = source.strip_prefix("data:") {
        return data_handle(sel);
    }
    let text = std::fs::read_to_string(source)
        .map_err(|e| Error::BadParams(format!("cannot read `{source}`: {e}")))?;
    Ok(Box::new(machine_handle(mealy::parse(&text)?.to_machine())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selectors_resolve() {
        for (sel, degree) in [
            ("z", 2),
            ("zomega", 3),
            ("zomega:n=2", 3),
            ("zl-wr-zd:l=2,d=2", 4),
            ("cp-wr-z2:p=3", 4),
            ("cp-wr-z2:p=3,order=inverses", 4),
            ("zwrz", 3),
            ("zwrz-wr-c2", 4),
            ("lamplighter:B=2", 5),
            ("lamplighter:B=2,3", 13),
            ("concat:lamplighter:B=2+zwrz", 8),
            ("concat:zwrz+zwrz", 6),
        ] {
            assert_eq!(data_handle(sel).unwrap().degree(), degree, "{sel}");
        }
    }

    #[test]
    fn bad_selectors() {
        for sel in ["nope", "zl-wr-zd:l=2", "cp-wr-z2:p=4", "zwrz:x=1", "concat:z+zwrz", "lamplighter:B=1"] {
            assert!(data(sel).is_err(), "{sel}");
        }
    }

    #[test]
    fn machine_sources() {
        assert_eq!(machine("builtin:diagram1").unwrap().orbit_type().to_string(), "(2,1)");
        let h = machine("builtin:thmD-engine(2)").unwrap();
        assert_eq!(
            h.recursion_lines().unwrap(),
            builtin_machine("thmD(2)").unwrap().recursion_lines()
        );
        assert!(machine("/nonexistent/file").is_err());
    }
}
