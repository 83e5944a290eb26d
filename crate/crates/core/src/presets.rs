//! Named example groups. Every preset is group-file text and is loaded
//! through [`parse_group_file`], exactly like user input.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::groupfile::{parse_group_file, GroupFile};
use crate::matgroup::FiniteMatrixGroup;

#[derive(Clone, Copy, Debug)]
enum Builder {
    Fixed(&'static str),
    /// Text generator for a one-parameter family, with the least accepted value.
    Family {
        build: fn(u32) -> String,
        min: u32,
    },
}

#[derive(Clone, Copy, Debug)]
pub struct Preset {
    pub name: &'static str,
    pub description: &'static str,
    builder: Builder,
}

impl Preset {
    pub fn is_family(&self) -> bool {
        matches!(self.builder, Builder::Family { .. })
    }

    /// Group-file text. Families need a parameter; fixed presets reject one.
    pub fn source(&self, param: Option<u32>) -> Result<String> {
        match (self.builder, param) {
            (Builder::Fixed(text), None) => Ok(text.to_string()),
            (Builder::Family { build, min }, Some(n)) if n >= min => Ok(build(n)),
            (_, p) => Err(Error::InvalidParameter {
                preset: self.name.to_string(),
                value: p.map_or(-1, i64::from),
            }),
        }
    }

    pub fn load(&self, param: Option<u32>) -> Result<GroupFile> {
        parse_group_file(&self.source(param)?)
    }

    pub fn group(&self, param: Option<u32>, max_order: usize) -> Result<FiniteMatrixGroup> {
        FiniteMatrixGroup::enumerate(&self.load(param)?.generators, max_order)
    }

    /// `name` or `name(n)`.
    pub fn label(&self, param: Option<u32>) -> String {
        match param {
            Some(n) => format!("{}({n})", self.name),
            None => self.name.to_string(),
        }
    }
}

const CATALOG: &[Preset] = &[
    Preset {
        name: "trivial",
        description: "trivial group in GL(m); parameter m",
        builder: Builder::Family {
            build: trivial,
            min: 1,
        },
    },
    Preset {
        name: "cyclic_sl2",
        description: "cyclic group <diag(ζ_n, ζ_n⁻¹)> in SL(2); parameter n",
        builder: Builder::Family {
            build: cyclic_sl2,
            min: 1,
        },
    },
    Preset {
        name: "cyclic_gl1",
        description: "cyclic group <ζ_n> in GL(1); parameter n",
        builder: Builder::Family {
            build: cyclic_gl1,
            min: 1,
        },
    },
    Preset {
        name: "binary_dihedral",
        description: "binary dihedral group of order 4n in SL(2); parameter n",
        builder: Builder::Family {
            build: binary_dihedral,
            min: 2,
        },
    },
    Preset {
        name: "binary_tetrahedral",
        description: "binary tetrahedral group (order 24) in SL(2)",
        builder: Builder::Fixed(include_str!("../presets/binary_tetrahedral.toml")),
    },
    Preset {
        name: "binary_octahedral",
        description: "binary octahedral group (order 48) in SL(2)",
        builder: Builder::Fixed(include_str!("../presets/binary_octahedral.toml")),
    },
    Preset {
        name: "binary_icosahedral",
        description: "binary icosahedral group (order 120) in SL(2)",
        builder: Builder::Fixed(include_str!("../presets/binary_icosahedral.toml")),
    },
    Preset {
        name: "neg_identity_sl2",
        description: "{±I} in SL(2)",
        builder: Builder::Fixed(include_str!("../presets/neg_identity_sl2.toml")),
    },
    Preset {
        name: "scalar_i_gl2",
        description: "cyclic group <iI> in GL(2)",
        builder: Builder::Fixed(include_str!("../presets/scalar_i_gl2.toml")),
    },
    Preset {
        name: "klein_gl2",
        description: "Klein four-group {±I, ±diag(1,-1)} in GL(2)",
        builder: Builder::Fixed(include_str!("../presets/klein_gl2.toml")),
    },
    Preset {
        name: "q8",
        description: "quaternion group (order 8) in SL(2)",
        builder: Builder::Fixed(include_str!("../presets/q8.toml")),
    },
    Preset {
        name: "dbrane_scalar6",
        description: "cyclic group <ζ₆I> in GL(4)",
        builder: Builder::Fixed(include_str!("../presets/dbrane_scalar6.toml")),
    },
];

pub fn preset_catalog() -> &'static [Preset] {
    CATALOG
}

pub fn find_preset(name: &str) -> Result<&'static Preset> {
    CATALOG
        .iter()
        .find(|p| p.name == name)
        .ok_or_else(|| Error::UnknownPreset(name.to_string()))
}

/// Splits `name:n` into a preset and its parameter.
pub fn resolve(spec: &str) -> Result<(&'static Preset, Option<u32>)> {
    match spec.split_once(':') {
        Some((name, n)) => {
            let preset = find_preset(name)?;
            let n = n.parse::<u32>().map_err(|_| Error::InvalidParameter {
                preset: name.to_string(),
                value: n.parse::<i64>().unwrap_or(-1),
            })?;
            Ok((preset, Some(n)))
        }
        None => Ok((find_preset(spec)?, None)),
    }
}

fn header(description: &str, conductor: u32, dimension: u32) -> String {
    format!("description = \"{description}\"\nconductor = {conductor}\ndimension = {dimension}\n")
}

fn matrix(rows: &[Vec<String>]) -> String {
    let mut out = String::from("\n[[generator]]\nrows = [\n");
    for r in rows {
        let cells: Vec<String> = r.iter().map(|c| format!("\"{c}\"")).collect();
        writeln!(out, "    [{}],", cells.join(", ")).unwrap();
    }
    out.push_str("]\n");
    out
}

fn diagonal(values: &[&str]) -> Vec<Vec<String>> {
    (0..values.len())
        .map(|i| {
            (0..values.len())
                .map(|j| {
                    if i == j {
                        values[i].to_string()
                    } else {
                        "0".to_string()
                    }
                })
                .collect()
        })
        .collect()
}

fn trivial(m: u32) -> String {
    let ones = vec!["1"; m as usize];
    header(&format!("trivial group in GL({m})"), 1, m) + &matrix(&diagonal(&ones))
}

fn cyclic_sl2(n: u32) -> String {
    header(&format!("cyclic group of order {n} in SL(2)"), n, 2)
        + &matrix(&diagonal(&["z", "z^-1"]))
}

fn cyclic_gl1(n: u32) -> String {
    header(&format!("cyclic group of order {n} in GL(1)"), n, 1) + &matrix(&diagonal(&["z"]))
}

fn binary_dihedral(n: u32) -> String {
    let swap = vec![
        vec!["0".to_string(), "1".to_string()],
        vec!["-1".to_string(), "0".to_string()],
    ];
    header(
        &format!("binary dihedral group of order {} in SL(2)", 4 * n),
        2 * n,
        2,
    ) + &matrix(&diagonal(&["z", "z^-1"]))
        + &matrix(&swap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matgroup::DEFAULT_MAX_ORDER;

    fn order(spec: &str) -> usize {
        let (p, n) = resolve(spec).unwrap();
        p.group(n, DEFAULT_MAX_ORDER).unwrap().order()
    }

    #[test]
    fn fixed_orders() {
        assert_eq!(order("binary_tetrahedral"), 24);
        assert_eq!(order("binary_octahedral"), 48);
        assert_eq!(order("binary_icosahedral"), 120);
        assert_eq!(order("neg_identity_sl2"), 2);
        assert_eq!(order("scalar_i_gl2"), 4);
        assert_eq!(order("klein_gl2"), 4);
        assert_eq!(order("q8"), 8);
        assert_eq!(order("dbrane_scalar6"), 6);
    }

    #[test]
    fn family_orders() {
        for n in 1..=8 {
            assert_eq!(order(&format!("cyclic_sl2:{n}")), n as usize);
            assert_eq!(order(&format!("cyclic_gl1:{n}")), n as usize);
        }
        for n in 2..=5 {
            assert_eq!(order(&format!("binary_dihedral:{n}")), 4 * n as usize);
        }
        let (p, n) = resolve("trivial:4").unwrap();
        let g = p.group(n, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!((g.order(), g.dim()), (1, 4));
    }

    #[test]
    fn special_linear_presets() {
        for name in [
            "binary_tetrahedral",
            "binary_octahedral",
            "binary_icosahedral",
            "q8",
            "neg_identity_sl2",
        ] {
            let g = find_preset(name)
                .unwrap()
                .group(None, DEFAULT_MAX_ORDER)
                .unwrap();
            assert!(g.is_special_linear(), "{name}");
        }
        let g = find_preset("klein_gl2")
            .unwrap()
            .group(None, DEFAULT_MAX_ORDER)
            .unwrap();
        assert_eq!(g.class_count(), 4);
        assert!(!g.is_special_linear());
    }

    #[test]
    fn class_sizes() {
        let g = find_preset("binary_tetrahedral")
            .unwrap()
            .group(None, DEFAULT_MAX_ORDER)
            .unwrap();
        let mut sizes = g.class_sizes();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 4, 4, 4, 4, 6]);
        let g = find_preset("q8")
            .unwrap()
            .group(None, DEFAULT_MAX_ORDER)
            .unwrap();
        let mut sizes = g.class_sizes();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn lookup_errors() {
        assert!(matches!(resolve("nope"), Err(Error::UnknownPreset(_))));
        assert!(matches!(
            resolve("q8:3").and_then(|(p, n)| p.source(n)),
            Err(Error::InvalidParameter { .. })
        ));
        assert!(matches!(
            resolve("cyclic_sl2:x"),
            Err(Error::InvalidParameter { .. })
        ));
        assert!(matches!(
            find_preset("cyclic_sl2").unwrap().source(None),
            Err(Error::InvalidParameter { .. })
        ));
        assert!(matches!(
            find_preset("binary_dihedral").unwrap().source(Some(1)),
            Err(Error::InvalidParameter { .. })
        ));
    }
}
