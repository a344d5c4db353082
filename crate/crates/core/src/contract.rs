//! Sums of products of traces over index assignments.
//!
//! Each word is a list of pieces multiplied right to left (later pieces on
//! the left) and closed with a functional. Variables are shared between
//! words; a variable local to one word is summed out inside that word
//! before the shared ones are contracted.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::hopf::HopfAlgebra;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Piece {
    Fixed(usize),
    /// Value `tables[table][t]` where `t` is the term chosen for `var`.
    Var {
        var: usize,
        table: usize,
    },
}

impl Piece {
    fn var(self) -> Option<usize> {
        match self {
            Piece::Fixed(_) => None,
            Piece::Var { var, .. } => Some(var),
        }
    }
}

pub(crate) struct Network<'a> {
    pub algebra: &'a HopfAlgebra,
    pub trace: &'a [Scalar],
    pub fixed: Vec<Vec<Scalar>>,
    pub tables: Vec<Vec<Vec<Scalar>>>,
    pub n_terms: Vec<usize>,
    /// Optional coefficient per term, counted once per variable.
    pub weights: Vec<Option<Vec<Scalar>>>,
    pub words: Vec<Vec<Piece>>,
}

struct WordRun<'n, 'a> {
    net: &'n Network<'a>,
    word: &'n [Piece],
    vars: Vec<usize>,
    owned: Vec<usize>,
    out: BTreeMap<Vec<usize>, Scalar>,
}

impl WordRun<'_, '_> {
    fn value(&self, p: Piece, assign: &[Option<usize>]) -> &[Scalar] {
        match p {
            Piece::Fixed(i) => &self.net.fixed[i],
            Piece::Var { var, table } => &self.net.tables[table][assign[var].expect("assigned")],
        }
    }

    fn run(&mut self, at: usize, prod: Vec<Scalar>, assign: &mut Vec<Option<usize>>) {
        if prod.iter().all(Scalar::is_zero) {
            return;
        }
        if at == self.word.len() {
            let mut v = self.net.algebra.eval(self.net.trace, &prod);
            for x in &self.owned {
                if let Some(w) = &self.net.weights[*x] {
                    v = &v * &w[assign[*x].expect("assigned")];
                }
            }
            if !v.is_zero() {
                let key = self.vars.iter().map(|c| assign[*c].expect("assigned")).collect();
                self.out.insert(key, v);
            }
            return;
        }
        let piece = self.word[at];
        match piece.var() {
            Some(x) if assign[x].is_none() => {
                for t in 0..self.net.n_terms[x] {
                    assign[x] = Some(t);
                    let next = self.net.algebra.mul_coeffs(self.value(piece, assign), &prod);
                    self.run(at + 1, next, assign);
                }
                assign[x] = None;
            }
            _ => {
                let next = self.net.algebra.mul_coeffs(self.value(piece, assign), &prod);
                self.run(at + 1, next, assign);
            }
        }
    }
}

pub(crate) fn contract(net: &Network) -> Scalar {
    let field = net.algebra.field().clone();
    let n_vars = net.n_terms.len();
    let mut words_of = vec![Vec::new(); n_vars];
    for (w, word) in net.words.iter().enumerate() {
        for p in word {
            if let Some(x) = p.var() {
                if !words_of[x].contains(&w) {
                    words_of[x].push(w);
                }
            }
        }
    }
    let shared: Vec<usize> = (0..n_vars).filter(|x| words_of[*x].len() > 1).collect();

    let mut factors: Vec<(Vec<usize>, BTreeMap<Vec<usize>, Scalar>)> = Vec::new();
    for (w, word) in net.words.iter().enumerate() {
        let mut vars: Vec<usize> = word.iter().filter_map(|p| p.var()).collect();
        vars.sort_unstable();
        vars.dedup();
        let owned = vars.iter().copied().filter(|x| words_of[*x][0] == w).collect();
        let mut run = WordRun { net, word, vars, owned, out: BTreeMap::new() };
        let mut assign = vec![None; n_vars];
        run.run(0, net.algebra.unit_coeffs().to_vec(), &mut assign);
        let keep: Vec<usize> = (0..run.vars.len()).filter(|i| shared.contains(&run.vars[*i])).collect();
        let mut reduced: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
        for (key, v) in run.out {
            let k: Vec<usize> = keep.iter().map(|i| key[*i]).collect();
            let e = reduced.entry(k).or_insert_with(|| field.zero());
            *e = &*e + &v;
        }
        factors.push((keep.iter().map(|i| run.vars[*i]).collect(), reduced));
    }

    // Odometer over the shared variables.
    let mut total = field.zero();
    if shared.iter().any(|x| net.n_terms[*x] == 0) {
        return total;
    }
    let mut assign = vec![0usize; n_vars];
    loop {
        let mut term = field.one();
        for (vars, table) in &factors {
            let key: Vec<usize> = vars.iter().map(|x| assign[*x]).collect();
            match table.get(&key) {
                Some(v) => term = &term * v,
                None => {
                    term = field.zero();
                    break;
                }
            }
        }
        if !term.is_zero() {
            total = &total + &term;
        }
        let mut k = 0;
        loop {
            if k == shared.len() {
                return total;
            }
            let x = shared[k];
            assign[x] += 1;
            if assign[x] < net.n_terms[x] {
                break;
            }
            assign[x] = 0;
            k += 1;
        }
    }
}
