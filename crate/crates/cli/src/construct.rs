//! `construct --op NAME --args key=value …`: every relational construction by name.

use std::collections::BTreeMap;
use std::path::Path;

use subclone::constructions as c;
use subclone::finite::{center, Elem, Partition, Relation};

use crate::format::{write_partition, write_relation, Document};
use crate::input::{load_theta, read, InputError, Result};

/// Operation names with their keys; `name=` is accepted everywhere.
pub const OPS: &[(&str, &str)] = &[
    ("rho_i_theta", "rho theta i"),
    ("rho_0_theta", "rho theta"),
    ("eta", "theta h"),
    ("permute", "rho sigma"),
    ("symmetric_core", "rho"),
    ("beta", "rho theta n"),
    ("varsigma", "rho theta"),
    ("beta_l", "rho theta n l"),
    ("varsigma_l", "rho theta l"),
    ("extended_family", "rho theta n l"),
    ("zeta", "rho theta"),
    ("zeta_l", "rho theta l"),
    ("gamma_prime", "rho theta [shape]"),
    ("diagonal", "theta h eps1 eps2"),
    ("h_regular", "family"),
    ("quotient", "rho theta"),
    ("preimage", "rho theta"),
    ("quotient_partition", "rho theta"),
    ("affine", "group"),
    ("alpha_1", "group theta"),
    ("graph", "perm [k]"),
    ("compose", "rho other"),
    ("inverse", "rho"),
    ("center", "rho"),
];

pub fn usage() -> String {
    let mut s = String::from("operations:\n");
    for (op, keys) in OPS {
        s.push_str(&format!("  {op:<20} {keys}\n"));
    }
    s
}

struct Args(BTreeMap<String, String>);

impl Args {
    fn parse(raw: &[String]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for a in raw {
            let Some((key, value)) = a.split_once('=') else {
                return Err(InputError(format!("argument `{a}` is not key=value")));
            };
            if map.insert(key.to_string(), value.to_string()).is_some() {
                return Err(InputError(format!("argument `{key}` given twice")));
            }
        }
        Ok(Args(map))
    }

    fn get(&self, key: &str) -> Result<&str> {
        self.0.get(key).map(String::as_str).ok_or_else(|| InputError(format!("missing argument `{key}=`")))
    }

    fn number(&self, key: &str) -> Result<usize> {
        let v = self.get(key)?;
        v.parse().map_err(|_| InputError(format!("argument `{key}` expects a number, found `{v}`")))
    }

    fn list(&self, key: &str) -> Result<Vec<usize>> {
        list(key, self.get(key)?)
    }

    /// Blocks separated by `/`, elements by `,`: `0,1/2`.
    fn blocks(&self, key: &str) -> Result<Vec<Vec<usize>>> {
        let v = self.get(key)?;
        if v.is_empty() {
            return Ok(Vec::new());
        }
        v.split('/').map(|b| list(key, b)).collect()
    }

    fn theta(&self) -> Result<Partition> {
        Ok(load_theta(Path::new(self.get("theta")?))?.1)
    }

    /// A relation file, or a single partition or a permutation in relational form.
    fn relation(&self, key: &str) -> Result<(String, Relation)> {
        let path = self.get(key)?;
        match read(Path::new(path))? {
            Document::Relation { name, relation } => Ok((name, relation)),
            Document::Partitions(mut ps) if ps.len() == 1 => {
                let (name, p) = ps.pop().expect("one partition");
                Ok((name, p.to_relation()))
            }
            Document::Permutation { name, k: Some(k), cycles } => {
                let pi = subclone::finite::Permutation::from_cycles(k, &cycles)?;
                Ok((name.unwrap_or_else(|| "pi".into()), pi.graph()))
            }
            d => Err(InputError(format!("{path}: expected a relation, found a {} file", d.kind()))),
        }
    }

    fn partition(&self, key: &str) -> Result<(String, Partition)> {
        load_theta(Path::new(self.get(key)?))
    }
}

fn list(key: &str, v: &str) -> Result<Vec<usize>> {
    v.split(',')
        .map(|x| x.trim().parse().map_err(|_| InputError(format!("argument `{key}` expects numbers, found `{x}`"))))
        .collect()
}

/// Runs the named construction and returns the output file.
pub fn construct(op: &str, raw: &[String]) -> Result<String> {
    let a = Args::parse(raw)?;
    let rho = || a.relation("rho");
    let named = |default: &str, r: Relation| -> String {
        let name = a.0.get("name").map_or(default, String::as_str);
        write_relation(name, &r)
    };
    let out = match op {
        "rho_i_theta" => {
            let (n, r) = rho()?;
            named(&n, c::rho_i_theta(&r, &a.theta()?, a.number("i")?)?)
        }
        "rho_0_theta" => {
            let (n, r) = rho()?;
            named(&n, c::rho_0_theta(&r, &a.theta()?)?)
        }
        "eta" => named("eta", c::eta(&a.theta()?, a.number("h")?)?),
        "permute" => {
            let (n, r) = rho()?;
            named(&n, c::permute(&r, &a.list("sigma")?)?)
        }
        "symmetric_core" => {
            let (n, r) = rho()?;
            named(&n, c::symmetric_core(&r)?)
        }
        "beta" => {
            let (n, r) = rho()?;
            named(&n, c::beta(&r, &a.theta()?, a.number("n")?)?)
        }
        "varsigma" => {
            let (n, r) = rho()?;
            named(&n, c::varsigma(&r, &a.theta()?)?)
        }
        "beta_l" => {
            let (n, r) = rho()?;
            named(&n, c::beta_l(&r, &a.theta()?, a.number("n")?, a.number("l")?)?)
        }
        "varsigma_l" => {
            let (n, r) = rho()?;
            named(&n, c::varsigma_l(&r, &a.theta()?, a.number("l")?)?)
        }
        "extended_family" => {
            let (n, r) = rho()?;
            named(&n, c::extended_family(&r, &a.theta()?, a.number("n")?, a.number("l")?)?)
        }
        "zeta" => {
            let (n, r) = rho()?;
            named(&n, c::zeta(&r, &a.theta()?)?)
        }
        "zeta_l" => {
            let (n, r) = rho()?;
            named(&n, c::zeta_l(&r, &a.theta()?, a.number("l")?)?)
        }
        "gamma_prime" => {
            let (n, r) = rho()?;
            let theta = a.theta()?;
            let shape = if a.0.contains_key("shape") { a.list("shape")? } else { c::gamma_shape(&theta) };
            named(&n, c::gamma_prime(&r, &theta, &shape)?.relation)
        }
        "diagonal" => {
            let spec = c::DiagonalSpec::new(a.number("h")?, a.blocks("eps1")?, a.blocks("eps2")?)?;
            named("diagonal", c::diagonal(&spec, &a.theta()?)?)
        }
        "h_regular" => {
            let path = a.get("family")?;
            let members = match read(Path::new(path))? {
                Document::Partitions(ps) => ps.into_iter().map(|(_, p)| p).collect(),
                d => return Err(InputError(format!("{path}: expected partitions, found a {} file", d.kind()))),
            };
            named("lambda", c::h_regular(&c::RegularFamily::new(members)?))
        }
        "quotient" => {
            let (n, r) = rho()?;
            named(&n, c::quotient(&r, &a.theta()?)?)
        }
        "preimage" => {
            let (n, r) = rho()?;
            named(&n, c::preimage(&r, &a.theta()?)?)
        }
        "quotient_partition" => {
            let (n, p) = a.partition("rho")?;
            let q = c::quotient_partition(&p, &a.theta()?)?;
            write_partition(a.0.get("name").map_or(&n, |s| s), &q)
        }
        "affine" | "alpha_1" => {
            let path = a.get("group")?;
            let g = match read(Path::new(path))? {
                Document::Group(g) => g,
                d => return Err(InputError(format!("{path}: expected a group, found a {} file", d.kind()))),
            };
            let alpha = c::affine(&g);
            if op == "affine" {
                named("alpha", alpha)
            } else {
                named("alpha_1", c::alpha_1(&alpha, &a.theta()?)?)
            }
        }
        "graph" => {
            let path = a.get("perm")?;
            let (name, k, cycles) = match read(Path::new(path))? {
                Document::Permutation { name, k, cycles } => (name, k, cycles),
                d => return Err(InputError(format!("{path}: expected a permutation, found a {} file", d.kind()))),
            };
            let k = match (k, a.0.contains_key("k")) {
                (_, true) => a.number("k")?,
                (Some(k), false) => k,
                (None, false) => cycles.iter().flatten().map(|&x| x as usize + 1).max().unwrap_or(0),
            };
            let pi = subclone::finite::Permutation::from_cycles(k, &cycles)?;
            named(name.as_deref().unwrap_or("pi"), c::graph(&pi))
        }
        "compose" => {
            let (n, r) = rho()?;
            let (_, s) = a.relation("other")?;
            named(&n, r.compose(&s)?)
        }
        "inverse" => {
            let (n, r) = rho()?;
            named(&n, r.inverse()?)
        }
        "center" => {
            let (n, r) = rho()?;
            let members: Vec<[Elem; 1]> = center(&r)?.into_iter().map(|x| [x]).collect();
            named(&n, Relation::from_tuples(r.k(), 1, members)?)
        }
        _ => return Err(InputError(format!("unknown operation `{op}`\n{}", usage()))),
    };
    Ok(out)
}
