//! Standard families and the small gadgets used by the constructions.
//!
//! Numbering is fixed: paths and cycles are numbered along the walk, a
//! gadget's extra vertex is the highest index, and the caterpillar's extra
//! leaf is the highest index.

use super::Graph;
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `path:n`, vertices `0..n` along the path.
    Path,
    /// `cycle:n`, n ≥ 3.
    Cycle,
    /// `complete:n`.
    Complete,
    /// `star:l`, the star K_{1,l}: centre 0 and leaves `1..=l`.
    Star,
    /// `complete_bipartite:a,b`, parts `0..a` and `a..a+b`.
    CompleteBipartite,
    /// `cocktail_party:n`, K_{2n} minus the matching `{2i, 2i+1}`.
    CocktailParty,
    /// `k1_join_matchings:t`, apex 0 joined to t disjoint edges `{2i+1, 2i+2}`.
    K1JoinMatchings,
    /// `caterpillar:n,k`: path v_1..v_{n-1} plus leaf v_n at v_k (1-based names).
    Caterpillar,
    /// `gadget_c_star:m`, cycle C_m (m even) with a pendant at vertex 0.
    GadgetCStar,
    /// `gadget_c_prime:m`, cycle C_m with an extra vertex adjacent to 0 and 1.
    GadgetCPrime,
    /// `gadget_c8_double`, C_8 with an extra vertex adjacent to 0..=4.
    GadgetC8Double,
    /// `petersen`: outer 5-cycle `0..5`, spokes `i–i+5`, inner pentagram.
    Petersen,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 12] = [
        FamilyKind::Path,
        FamilyKind::Cycle,
        FamilyKind::Complete,
        FamilyKind::Star,
        FamilyKind::CompleteBipartite,
        FamilyKind::CocktailParty,
        FamilyKind::K1JoinMatchings,
        FamilyKind::Caterpillar,
        FamilyKind::GadgetCStar,
        FamilyKind::GadgetCPrime,
        FamilyKind::GadgetC8Double,
        FamilyKind::Petersen,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Complete => "complete",
            FamilyKind::Star => "star",
            FamilyKind::CompleteBipartite => "complete_bipartite",
            FamilyKind::CocktailParty => "cocktail_party",
            FamilyKind::K1JoinMatchings => "k1_join_matchings",
            FamilyKind::Caterpillar => "caterpillar",
            FamilyKind::GadgetCStar => "gadget_c_star",
            FamilyKind::GadgetCPrime => "gadget_c_prime",
            FamilyKind::GadgetC8Double => "gadget_c8_double",
            FamilyKind::Petersen => "petersen",
        }
    }

    fn arity(self) -> usize {
        match self {
            FamilyKind::GadgetC8Double | FamilyKind::Petersen => 0,
            FamilyKind::CompleteBipartite | FamilyKind::Caterpillar => 2,
            _ => 1,
        }
    }
}

/// A family name with its integer parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, params: Vec<usize>) -> Self {
        FamilySpec { kind, params }
    }

    pub fn path(n: usize) -> Self {
        Self::new(FamilyKind::Path, vec![n])
    }

    pub fn cycle(n: usize) -> Self {
        Self::new(FamilyKind::Cycle, vec![n])
    }

    pub fn complete(n: usize) -> Self {
        Self::new(FamilyKind::Complete, vec![n])
    }

    pub fn star(leaves: usize) -> Self {
        Self::new(FamilyKind::Star, vec![leaves])
    }

    pub fn caterpillar(n: usize, k: usize) -> Self {
        Self::new(FamilyKind::Caterpillar, vec![n, k])
    }

    pub fn petersen() -> Self {
        Self::new(FamilyKind::Petersen, vec![])
    }

    /// Checks parameter count and each family's domain.
    pub fn validate(&self) -> Result<()> {
        let kind = self.kind;
        if self.params.len() != kind.arity() {
            return Err(Error::Domain(format!(
                "{} takes {} parameter(s), got {}",
                kind.name(),
                kind.arity(),
                self.params.len()
            )));
        }
        let p = &self.params;
        let fail = |bound: &str| Err(Error::Domain(format!("{}: requires {bound}", kind.name())));
        match kind {
            FamilyKind::Cycle if p[0] < 3 => fail("n >= 3"),
            FamilyKind::Caterpillar if !(p[0] >= 4 && p[1] >= 2 && p[1] + 2 <= p[0]) => {
                fail("n >= 4 and 2 <= k <= n-2")
            }
            FamilyKind::GadgetCStar if p[0] < 4 || p[0] % 2 == 1 => {
                fail("an even cycle length >= 4")
            }
            FamilyKind::GadgetCPrime if p[0] < 3 => fail("cycle length >= 3"),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind.name())?;
        for (i, p) in self.params.iter().enumerate() {
            write!(f, "{}{p}", if i == 0 { ':' } else { ',' })?;
        }
        Ok(())
    }
}

/// Parses the `name:p1,p2` grammar, e.g. `caterpillar:12,6` or `petersen`.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = match s.split_once(':') {
            Some((n, r)) => (n.trim(), Some(r)),
            None => (s.trim(), None),
        };
        let kind = FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == name)
            .ok_or_else(|| {
                Error::Domain(format!("unknown family '{name}' (grammar: name[:p1[,p2]])"))
            })?;
        let params = match rest {
            None => Vec::new(),
            Some(r) => r
                .split(',')
                .map(|t| {
                    t.trim().parse::<usize>().map_err(|_| {
                        Error::Domain(format!(
                            "bad parameter '{t}' in '{s}' (grammar: name[:p1[,p2]])"
                        ))
                    })
                })
                .collect::<Result<_>>()?,
        };
        let spec = FamilySpec::new(kind, params);
        spec.validate()?;
        Ok(spec)
    }
}

pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let p = &spec.params;
    let g = match spec.kind {
        FamilyKind::Path => {
            let mut g = Graph::empty(p[0]);
            for i in 1..p[0] {
                g.add_edge(i - 1, i);
            }
            g
        }
        FamilyKind::Cycle => cycle_with_extra(p[0], 0),
        FamilyKind::Complete => {
            let mut g = Graph::empty(p[0]);
            for u in 0..p[0] {
                for v in u + 1..p[0] {
                    g.add_edge(u, v);
                }
            }
            g
        }
        FamilyKind::Star => {
            let mut g = Graph::empty(p[0] + 1);
            for v in 1..=p[0] {
                g.add_edge(0, v);
            }
            g
        }
        FamilyKind::CompleteBipartite => {
            let (a, b) = (p[0], p[1]);
            let mut g = Graph::empty(a + b);
            for u in 0..a {
                for v in a..a + b {
                    g.add_edge(u, v);
                }
            }
            g
        }
        FamilyKind::CocktailParty => {
            let n = 2 * p[0];
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if u / 2 != v / 2 {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        }
        FamilyKind::K1JoinMatchings => {
            let t = p[0];
            let mut g = Graph::empty(2 * t + 1);
            for v in 1..=2 * t {
                g.add_edge(0, v);
            }
            for i in 0..t {
                g.add_edge(2 * i + 1, 2 * i + 2);
            }
            g
        }
        FamilyKind::Caterpillar => {
            let (n, k) = (p[0], p[1]);
            let mut g = Graph::empty(n);
            for i in 1..n - 1 {
                g.add_edge(i - 1, i);
            }
            g.add_edge(k - 1, n - 1);
            g
        }
        FamilyKind::GadgetCStar => {
            let mut g = cycle_with_extra(p[0], 1);
            g.add_edge(0, p[0]);
            g
        }
        FamilyKind::GadgetCPrime => {
            let mut g = cycle_with_extra(p[0], 1);
            g.add_edge(0, p[0]);
            g.add_edge(1, p[0]);
            g
        }
        FamilyKind::GadgetC8Double => {
            let mut g = cycle_with_extra(8, 1);
            for v in 0..5 {
                g.add_edge(v, 8);
            }
            g
        }
        FamilyKind::Petersen => {
            let mut g = Graph::empty(10);
            for i in 0..5 {
                g.add_edge(i, (i + 1) % 5);
                g.add_edge(i, i + 5);
                g.add_edge(5 + i, 5 + (i + 2) % 5);
            }
            g
        }
    };
    Ok(g)
}

fn cycle_with_extra(n: usize, extra: usize) -> Graph {
    let mut g = Graph::empty(n + extra);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ecc_profile;

    #[test]
    fn cycle_six_is_two_regular() {
        let g = build_family(&FamilySpec::cycle(6)).unwrap();
        assert_eq!((g.order(), g.edge_count()), (6, 6));
        assert!((0..6).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn c_star_six_has_order_seven() {
        let g = build_family(&"gadget_c_star:6".parse().unwrap()).unwrap();
        assert_eq!(g.order(), 7);
        assert_eq!(g.degree(6), 1);
        assert!(g.has_edge(0, 6));
    }

    #[test]
    fn caterpillar_diameter_is_n_minus_two() {
        let g = build_family(&FamilySpec::caterpillar(10, 5)).unwrap();
        assert_eq!(g.edge_count(), 9);
        assert!(g.is_connected());
        assert_eq!(ecc_profile(&g).unwrap().diameter, 8);
        assert!(g.has_edge(4, 9));
    }

    #[test]
    fn petersen_is_cubic_with_diameter_two() {
        let g = build_family(&FamilySpec::petersen()).unwrap();
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
        let p = ecc_profile(&g).unwrap();
        assert_eq!((p.radius, p.diameter), (2, 2));
    }

    #[test]
    fn domain_errors_name_the_bound() {
        let e = build_family(&FamilySpec::cycle(2)).unwrap_err();
        assert!(e.to_string().contains("n >= 3"));
        assert!(build_family(&FamilySpec::caterpillar(10, 9)).is_err());
        assert!(build_family(&FamilySpec::caterpillar(10, 1)).is_err());
        assert!("gadget_c_star:7".parse::<FamilySpec>().is_err());
        assert!("hypercube:3".parse::<FamilySpec>().is_err());
        assert!("path:x".parse::<FamilySpec>().is_err());
        assert!("petersen:1".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn grammar_round_trips() {
        for s in [
            "caterpillar:12,6",
            "petersen",
            "complete_bipartite:2,3",
            "k1_join_matchings:3",
        ] {
            assert_eq!(s.parse::<FamilySpec>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn cocktail_party_and_matchings() {
        let cp3 = build_family(&"cocktail_party:3".parse().unwrap()).unwrap();
        assert_eq!(cp3.edge_count(), 12);
        assert!(!cp3.has_edge(0, 1) && cp3.has_edge(1, 2));
        let m = build_family(&"k1_join_matchings:3".parse().unwrap()).unwrap();
        assert_eq!((m.order(), m.degree(0)), (7, 6));
    }
}
