use std::fmt;

use super::product::{Literal, Product};
use crate::error::{Error, Result};

/// Sum-of-products view of a switching function over `n` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SopForm {
    n: usize,
    products: Vec<Product>,
    disjoint: bool,
}

impl SopForm {
    pub fn new(n: usize, products: Vec<Product>) -> Result<Self> {
        for t in &products {
            if let Some(v) = t.max_var().filter(|&v| v >= n) {
                return Err(Error::VarOutOfRange { var: v, n });
            }
        }
        Ok(SopForm {
            n,
            products,
            disjoint: false,
        })
    }

    /// Like [`SopForm::new`] but sets the disjoint flag after checking every pair.
    pub fn new_disjoint(n: usize, products: Vec<Product>) -> Result<Self> {
        let mut s = Self::new(n, products)?;
        if !s.pairwise_disjoint() {
            return Err(Error::InvalidSystem(
                "products are not pairwise disjoint".into(),
            ));
        }
        s.disjoint = true;
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn products(&self) -> &[Product] {
        &self.products
    }

    pub fn is_disjoint(&self) -> bool {
        self.disjoint
    }

    /// Literal-clash check over every pair of products.
    pub fn pairwise_disjoint(&self) -> bool {
        self.products
            .iter()
            .enumerate()
            .all(|(i, a)| self.products[i + 1..].iter().all(|b| a.clashes_with(b)))
    }

    pub fn eval(&self, assignment: u64) -> bool {
        self.products.iter().any(|t| t.eval(assignment))
    }

    /// Quotient taken product by product. Disjointness survives: products that clash
    /// with `t` vanish, the rest keep every clash they had outside `t`.
    pub fn quotient(&self, t: &Product) -> SopForm {
        SopForm {
            n: self.n,
            products: self.products.iter().filter_map(|p| p.quotient(t)).collect(),
            disjoint: self.disjoint,
        }
    }

    /// Weight as `Σ 2^(n − ℓ(D_k))`; only meaningful for a disjoint form.
    pub fn disjoint_weight(&self) -> Option<u64> {
        self.disjoint
            .then(|| self.products.iter().map(|t| 1u64 << (self.n - t.len())).sum())
    }

    /// Sequential disjointing: each product is sharpened against every earlier one.
    ///
    /// For a piece `q` overlapping an earlier product `p`, the literals `l1..lr` of `p`
    /// missing from `q` yield the branches `q·~l1`, `q·l1·~l2`, …, `q·l1…l(r−1)·~lr`.
    pub fn make_disjoint(&self) -> SopForm {
        let mut emitted: Vec<Product> = Vec::new();
        for (i, &candidate) in self.products.iter().enumerate() {
            let mut pieces = vec![candidate];
            for earlier in &self.products[..i] {
                let mut next = Vec::with_capacity(pieces.len());
                for q in pieces {
                    if q.clashes_with(earlier) {
                        next.push(q);
                    } else if !q.implies(earlier) {
                        sharpen(q, earlier, &mut next);
                    }
                }
                pieces = next;
                if pieces.is_empty() {
                    break;
                }
            }
            emitted.extend(pieces);
        }
        SopForm {
            n: self.n,
            products: emitted,
            disjoint: true,
        }
    }
}

fn sharpen(q: Product, earlier: &Product, out: &mut Vec<Product>) {
    let mut prefix = q;
    for lit in earlier.literals().filter(|l| !q.contains_var(l.var)) {
        out.push(
            prefix
                .with(lit.complement())
                .expect("variable absent from piece"),
        );
        prefix = prefix.with(lit).expect("variable absent from piece");
    }
}

impl fmt::Display for SopForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.products.is_empty() {
            return f.write_str("0");
        }
        let sep = if self.disjoint { " ^ " } else { " + " };
        for (i, t) in self.products.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Convenience for building products from 1-based voter numbers in tests and fixtures.
pub fn positive_product(voters_1based: &[usize]) -> Product {
    Product::from_literals(voters_1based.iter().map(|&v| Literal::pos(v - 1)))
        .expect("distinct voters")
}
