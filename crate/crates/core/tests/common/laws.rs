//! The structural laws relating the conditions on connectivity pairs,
//! checked on one pair or one lattice at a time. Each function returns a
//! description of every law that fails, so an empty list means success.

use chainmail::connectivity::{classify_with_limits, SigmaClosure};
use chainmail::{ConnectivityPair, Lattice, Limits};

use super::{adjunction_literal, cl1_literal, dominated, elements, join, meet, subchainmail_literal, subsets};

fn law(failures: &mut Vec<String>, ok: bool, name: &str) {
    if !ok {
        failures.push(name.to_string());
    }
}

/// Sets of non-bottom elements with pairwise meets equal to the bottom.
pub fn positive_tmd(l: &Lattice) -> Vec<Vec<usize>> {
    let p = l.poset();
    let bottom = l.bottom();
    let nonzero: Vec<usize> = elements(p).into_iter().filter(|&x| x != bottom).collect();
    subsets(&nonzero)
        .into_iter()
        .filter(|s| {
            s.iter()
                .all(|&a| s.iter().all(|&b| a == b || meet(p, &[a, b]) == Some(bottom)))
        })
        .collect()
}

/// E1–E4 straight from their definitions.
pub fn e_literal(l: &Lattice) -> [Vec<usize>; 4] {
    let p = l.poset();
    let bottom = l.bottom();
    let all = elements(p);
    let disjoint_pairs: Vec<(usize, usize)> = all
        .iter()
        .flat_map(|&x| all.iter().map(move |&y| (x, y)))
        .filter(|&(x, y)| meet(p, &[x, y]) == Some(bottom))
        .collect();
    let tmd = positive_tmd(l);
    let e1 = all
        .iter()
        .copied()
        .filter(|&a| {
            a != bottom
                && disjoint_pairs
                    .iter()
                    .all(|&(x, y)| !p.leq(a, join(p, &[x, y]).unwrap()) || p.leq(a, x) || p.leq(a, y))
        })
        .collect();
    let e2 = all
        .iter()
        .copied()
        .filter(|&a| {
            a != bottom
                && disjoint_pairs
                    .iter()
                    .all(|&(x, y)| join(p, &[x, y]) != Some(a) || x == a || y == a)
        })
        .collect();
    let e3 = all
        .iter()
        .copied()
        .filter(|&a| tmd.iter().all(|s| join(p, s) != Some(a) || s.contains(&a)))
        .collect();
    let e4 = all
        .iter()
        .copied()
        .filter(|&a| {
            tmd.iter()
                .all(|s| !p.leq(a, join(p, s).unwrap()) || s.iter().any(|&t| p.leq(a, t)))
        })
        .collect();
    [e1, e2, e3, e4]
}

/// Laws that hold for every pair `(L, C)`.
pub fn pair_failures(pair: &ConnectivityPair) -> Vec<String> {
    let limits = Limits::generous();
    let mut f = Vec::new();
    let l = pair.lattice();
    let p = pair.poset();
    let c = pair.c().to_vec();
    let all = elements(p);
    let bottom = l.bottom();
    let r = classify_with_limits(pair, &limits).expect("small pair");

    // adjunction versus subchainmail, both by the library and literally
    let adj = pair.galois_adjunction_holds();
    let sub = chainmail::connectivity::is_subchainmail_of(p, pair.c());
    law(&mut f, adj == sub, "adjunction <=> subchainmail");
    law(
        &mut f,
        adj == adjunction_literal(p, &c),
        "adjunction agrees with the literal right adjoint",
    );
    law(
        &mut f,
        sub == subchainmail_literal(p, &c),
        "subchainmail agrees with its definition",
    );
    law(&mut f, r.connectivity == sub, "connectivity flag is subchainmail");
    law(
        &mut f,
        !r.connectivity || r.preconnectivity,
        "connectivity => preconnectivity",
    );

    // typical: CL1 without CL0 iff adjunction with components TMD in L+
    let components_positive_tmd = all.iter().all(|&x| {
        let cx = pair.components(x).to_vec();
        !cx.contains(&bottom)
            && cx
                .iter()
                .all(|&a| cx.iter().all(|&b| a == b || meet(p, &[a, b]) == Some(bottom)))
    });
    law(
        &mut f,
        r.typical == (adj && components_positive_tmd),
        "typical <=> adjunction with TMD components",
    );

    // CL1 forms
    let cl1 = cl1_literal(p, &c);
    law(&mut f, r.cl1 == cl1, "cl1 agrees with its definition");
    law(&mut f, r.cl1 == r.cl1_prime, "cl1 <=> cl1'");

    if r.connectivity {
        let join_closed = subsets(&c).iter().all(|s| join(p, s).is_some_and(|j| c.contains(&j)));
        let one_component = all.iter().all(|&x| pair.components(x).len() == 1);
        let kernel_connected = all.iter().all(|&x| c.contains(&pair.kernel(x)));
        let components_are_join = all.iter().all(|&x| {
            let below: Vec<usize> = c.iter().copied().filter(|&y| p.leq(y, x)).collect();
            pair.components(x).to_vec() == vec![join(p, &below).unwrap()]
        });
        law(&mut f, r.cl0 == join_closed, "cl0 <=> closed under joins");
        law(&mut f, r.cl0 == one_component, "cl0 <=> one component everywhere");
        law(&mut f, r.cl0 == kernel_connected, "cl0 <=> kernels connected");
        law(
            &mut f,
            r.cl0 == components_are_join,
            "cl0 <=> C(x) is the join of C below x",
        );
        if r.cl0 {
            let dc = pair.dc_sets(&limits).unwrap();
            let expected = c.len() + 1;
            law(
                &mut f,
                dc.len() == expected && dc.iter().all(|s| s.len() <= 1),
                "cl0 => exterior of C is empty set and singletons",
            );
        }
        law(
            &mut f,
            r.cl2 == all.iter().all(|&x| pair.kernel(x) == x),
            "cl2 <=> every element is its kernel",
        );
        law(
            &mut f,
            r.serra == (!r.kernel && r.saturated),
            "serra <=> saturated and not kernel",
        );
    }

    law(&mut f, !(r.cl0 || r.cl2) || r.cl1_half, "cl0 or cl2 => cl1.5");
    law(
        &mut f,
        !(r.connectivity && r.cl1_half) || r.cl1,
        "connectivity and cl1.5 => cl1",
    );
    law(
        &mut f,
        r.degenerate == (r.connectivity && r.cl0 && r.cl2),
        "degenerate <=> connectivity, cl0, cl2",
    );
    law(
        &mut f,
        !r.well_founded || (r.typical == !r.kernel),
        "well-founded => (typical <=> not kernel)",
    );
    law(&mut f, !r.separated || !r.kernel, "separated => not kernel");
    law(
        &mut f,
        !(r.well_founded && r.separated) || r.typical,
        "well-founded and separated => typical",
    );
    law(
        &mut f,
        (r.separated && r.serra) == r.absolute,
        "separated serra <=> absolute",
    );
    law(&mut f, r.views_agree, "adjoint views agree");

    let e = r.e_elements.as_ref().expect("small lattice").clone();
    if r.serra {
        law(&mut f, e.e4.is_subset(pair.c()), "serra => E4 elements connected");
    }
    let joins_of_e4 = all.iter().all(|&x| {
        let below: Vec<usize> = e.e4.iter().filter(|&a| p.leq(a, x)).collect();
        join(p, &below) == Some(x)
    });
    law(
        &mut f,
        r.absolute == (*pair.c() == e.e4 && joins_of_e4),
        "absolute <=> C is E4 and generates",
    );
    if r.absolute {
        law(&mut f, e.e2 == e.e4, "absolute => E2 elements are E4");
    }

    // ΣC
    let sigma = SigmaClosure::of(pair);
    let rs = classify_with_limits(&sigma.pair, &limits).unwrap();
    law(
        &mut f,
        r.connectivity == rs.connectivity,
        "connectivity transfers to ΣC",
    );
    law(&mut f, r.separated == rs.separated, "separatedness transfers to ΣC");
    law(&mut f, r.kernel == rs.kernel, "kernel transfers to ΣC");
    if r.kernel {
        law(&mut f, sigma.embedding == c, "kernel => ΣC = C");
    }
    law(&mut f, rs.cl2, "(ΣC, C) satisfies cl2");
    if !c.contains(&bottom) {
        law(
            &mut f,
            r.connectivity == rs.serra,
            "connectivity without 0 <=> (ΣC, C) serra",
        );
    }
    f
}

/// Laws about a lattice and its E1–E4 elements.
pub fn lattice_failures(l: &Lattice) -> Vec<String> {
    let limits = Limits::generous();
    let mut f = Vec::new();
    let p = l.poset();
    let e = l.e_summary(&limits).unwrap();
    let [e1, e2, e3, e4] = e_literal(l);
    law(&mut f, e.e1.to_vec() == e1, "E1 agrees with its definition");
    law(&mut f, e.e2.to_vec() == e2, "E2 agrees with its definition");
    law(&mut f, e.e3.to_vec() == e3, "E3 agrees with its definition");
    law(&mut f, e.e4.to_vec() == e4, "E4 agrees with its definition");
    law(&mut f, e.e4.is_subset(&e.e3) && e.e3.is_subset(&e.e2), "E4 => E3 => E2");
    law(&mut f, e.e4.is_subset(&e.e1) && e.e1.is_subset(&e.e2), "E4 => E1 => E2");
    if l.is_distributive() {
        law(
            &mut f,
            e.e1 == e.e2 && e.e2 == e.e3 && e.e3 == e.e4,
            "distributive => E1-E4 coincide",
        );
    }

    // the E4 elements form a typical connectivity whose Galois closed
    // sets are those TMD in L+
    let pair = ConnectivityPair::from_lattice(l.clone(), e.e4.clone());
    let r = classify_with_limits(&pair, &limits).unwrap();
    law(
        &mut f,
        r.typical && r.connectivity,
        "E4 elements form a typical connectivity",
    );
    let bottom = l.bottom();
    for s in pair.dc_sets(&limits).unwrap() {
        let closed = pair.components(l.join_all(&s)) == s;
        let members = s.to_vec();
        let positive_tmd = members
            .iter()
            .all(|&a| members.iter().all(|&b| a == b || l.meet(a, b) == bottom));
        if closed != positive_tmd {
            f.push(format!("Galois closed <=> TMD in L+ fails at {members:?}"));
            break;
        }
    }
    if r.well_founded {
        law(&mut f, r.separated, "E4 connectivity well-founded => separated");
    }

    let atomic = elements(p)
        .into_iter()
        .all(|x| x == bottom || l.atoms().iter().any(|a| p.leq(a, x)));
    law(&mut f, atomic == l.is_atomic(), "atomicity agrees with its definition");
    let boolean = boolean_literal(l);
    law(&mut f, boolean == l.is_boolean(), "Boolean agrees with its definition");
    let atomistic = elements(p).into_iter().all(|x| {
        let below: Vec<usize> = l.atoms().iter().filter(|&a| p.leq(a, x)).collect();
        join(p, &below) == Some(x)
    });
    law(
        &mut f,
        atomistic == l.is_atomistic(),
        "atomisticity agrees with its definition",
    );
    if atomistic {
        law(
            &mut f,
            r.absolute == (e.e4 == l.atoms()),
            "atomistic: absolute <=> E4 are the atoms",
        );
        law(&mut f, r.absolute == boolean, "atomistic: absolute <=> Boolean");
    }
    f
}

fn boolean_literal(l: &Lattice) -> bool {
    let p = l.poset();
    let all = elements(p);
    let complemented = all.iter().all(|&x| {
        all.iter()
            .any(|&y| meet(p, &[x, y]) == Some(l.bottom()) && join(p, &[x, y]) == Some(l.top()))
    });
    let distributive = all.iter().all(|&x| {
        all.iter().all(|&y| {
            all.iter().all(|&z| {
                let yz = join(p, &[y, z]).unwrap();
                let lhs = meet(p, &[x, yz]).unwrap();
                let rhs = join(p, &[meet(p, &[x, y]).unwrap(), meet(p, &[x, z]).unwrap()]).unwrap();
                lhs == rhs
            })
        })
    });
    complemented && distributive
}

/// Whether `s` is dominated by `t` in `l`, re-exported for callers that
/// only import this module.
pub fn below(l: &Lattice, s: &[usize], t: &[usize]) -> bool {
    dominated(l.poset(), s, t)
}
