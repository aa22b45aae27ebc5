//! Per-algebra bundle of everything the verification suites share: the
//! enumerated indecomposable modules with stable names, their translates, and
//! the indecomposable objects of the two-term category.

use std::sync::OnceLock;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::homology::{self, tau};
use crate::modrep::{self, decompose, enumerate_reps, EnumConfig, Rep};
use crate::par;
use crate::twoterm::{e_dim, TwoTermComplex};

#[derive(Clone, Debug)]
pub struct ModuleEntry {
    pub rep: Rep,
    /// Preferred name, e.g. `P_1`, `S_2`, `I_3` or `M_4`.
    pub name: String,
    /// Every name that applies (`P_3` and `S_3` for a simple projective).
    pub aliases: Vec<String>,
    /// Dimension vector plus enumeration index, stable across runs.
    pub key: String,
    pub tau: Rep,
    pub tau_rigid: bool,
    pub projective: Option<usize>,
    pub injective: Option<usize>,
}

pub const DEFAULT_CAP: usize = 2;

pub struct Context {
    pub alg: Algebra,
    pub op: Algebra,
    pub cfg: EnumConfig,
    pub modules: Vec<ModuleEntry>,
    /// `P_M` for each module (same order), then `P_v[1]` for each vertex.
    pub two_term: Vec<TwoTermComplex>,
    pub two_term_names: Vec<String>,
    /// Largest number of summands in the direct sums a verifier examines.
    pub cap: usize,
    e_table: OnceLock<Vec<Vec<usize>>>,
    hom_table: OnceLock<Vec<Vec<usize>>>,
    ext_table: OnceLock<Vec<Vec<usize>>>,
    ext_ar_table: OnceLock<Vec<Vec<usize>>>,
}

impl Context {
    pub fn new(alg: Algebra, cfg: EnumConfig) -> Result<Self> {
        let op = alg.opposite()?;
        let reps = enumerate_reps(alg.quiver(), alg.field(), cfg, |m| alg.satisfies_relations(m))?;
        let n = alg.num_vertices();
        let projs: Vec<Rep> = (0..n).map(|v| alg.projective(v)).collect();
        let injs: Vec<Rep> = (0..n).map(|v| homology::injective(&alg, &op, v)).collect();
        for (v, p) in projs.iter().enumerate() {
            if p.total_dim() > cfg.bound {
                return Err(Error::Guard {
                    what: format!("projective at vertex {} exceeds the dimension bound", alg.quiver().vertices()[v]),
                    estimate: p.total_dim() as u128,
                    limit: cfg.bound as u128,
                });
            }
        }
        let taus = par::map(&reps, |m| tau(&alg, &op, m));
        let vname = |v: usize| alg.quiver().vertices()[v].clone();
        let mut modules = Vec::with_capacity(reps.len());
        for (i, (rep, t)) in reps.into_iter().zip(taus).enumerate() {
            let projective = projs.iter().position(|p| modrep::iso(p, &rep));
            let injective = injs.iter().position(|q| modrep::iso(q, &rep));
            let simple = (rep.total_dim() == 1).then(|| rep.dims().iter().position(|&d| d == 1)).flatten();
            let mut aliases = Vec::new();
            if let Some(v) = projective {
                aliases.push(format!("P_{}", vname(v)));
            }
            if let Some(v) = simple {
                aliases.push(format!("S_{}", vname(v)));
            }
            if let Some(v) = injective {
                aliases.push(format!("I_{}", vname(v)));
            }
            aliases.push(format!("M_{i}"));
            let dims: Vec<String> = rep.dims().iter().map(|d| d.to_string()).collect();
            let key = format!("[{}]#{i}", dims.join(","));
            let tau_rigid = modrep::hom_dim(&rep, &t) == 0;
            modules.push(ModuleEntry { name: aliases[0].clone(), aliases, key, rep, tau: t, tau_rigid, projective, injective });
        }
        let mut two_term: Vec<TwoTermComplex> = par::map(&modules, |m| TwoTermComplex::presentation(&alg, &m.rep));
        let mut two_term_names: Vec<String> = modules.iter().map(|m| format!("P({})", m.name)).collect();
        for v in 0..n {
            let mut mult = vec![0; n];
            mult[v] = 1;
            two_term.push(TwoTermComplex::shifted(&alg, &mult));
            two_term_names.push(format!("P_{}[1]", vname(v)));
        }
        Ok(Context {
            alg,
            op,
            cfg,
            modules,
            two_term,
            two_term_names,
            cap: DEFAULT_CAP,
            e_table: OnceLock::new(),
            hom_table: OnceLock::new(),
            ext_table: OnceLock::new(),
            ext_ar_table: OnceLock::new(),
        })
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn num_vertices(&self) -> usize {
        self.alg.num_vertices()
    }

    pub fn reps(&self) -> Vec<Rep> {
        self.modules.iter().map(|m| m.rep.clone()).collect()
    }

    /// `e[i][j] = dim E(U_i, U_j)` over the two-term universe.
    pub fn e_table(&self) -> &Vec<Vec<usize>> {
        self.e_table.get_or_init(|| {
            let u = &self.two_term;
            let n = u.len();
            let flat = par::map_range(n * n, |k| e_dim(&u[k / n], &u[k % n]));
            flat.chunks(n.max(1)).map(|c| c.to_vec()).collect()
        })
    }

    /// `hom[i][j] = dim Hom(M_i, M_j)`.
    pub fn hom_table(&self) -> &Vec<Vec<usize>> {
        self.hom_table.get_or_init(|| self.module_table(modrep::hom_dim))
    }

    /// `ext[i][j] = dim Ext¹(M_i, M_j)` from projective presentations.
    pub fn ext_table(&self) -> &Vec<Vec<usize>> {
        self.ext_table.get_or_init(|| self.module_table(|a, b| homology::ext1(&self.alg, a, b).expect("same algebra").dim))
    }

    /// `ext[i][j]` through the Auslander-Reiten formula: the dimension of
    /// `Hom(M_j, τ M_i)` modulo maps factoring through injectives.
    pub fn ext_ar_table(&self) -> &Vec<Vec<usize>> {
        self.ext_ar_table.get_or_init(|| {
            let n = self.modules.len();
            let flat = par::map_range(n * n, |k| {
                let (i, j) = (k / n, k % n);
                homology::stable_hom_mod_inj(&self.alg, &self.op, &self.modules[j].rep, &self.modules[i].tau)
            });
            flat.chunks(n.max(1)).map(|c| c.to_vec()).collect()
        })
    }

    fn module_table<F: Fn(&Rep, &Rep) -> usize + Sync + Send>(&self, f: F) -> Vec<Vec<usize>> {
        let n = self.modules.len();
        let flat = par::map_range(n * n, |k| f(&self.modules[k / n].rep, &self.modules[k % n].rep));
        flat.chunks(n.max(1)).map(|c| c.to_vec()).collect()
    }

    pub fn module_index(&self, m: &Rep) -> Option<usize> {
        self.modules.iter().position(|e| modrep::iso(&e.rep, m))
    }

    pub fn module_by_name(&self, name: &str) -> Option<usize> {
        self.modules.iter().position(|e| e.aliases.iter().any(|a| a == name) || e.key == name)
    }

    /// Indecomposable summands of `m` as sorted module indices (with repetition).
    pub fn summand_indices(&self, m: &Rep) -> Result<Vec<usize>> {
        let mut out = decompose(m)
            .iter()
            .map(|s| self.module_index(s).ok_or_else(|| Error::Inconsistent("summand outside the enumerated modules".into())))
            .collect::<Result<Vec<_>>>()?;
        out.sort_unstable();
        Ok(out)
    }

    pub fn name_list(&self, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| self.modules[i].name.clone()).collect()
    }

    /// `⊕ modules[i]` over the given indices.
    pub fn sum_of(&self, idx: &[usize]) -> Rep {
        if idx.is_empty() {
            return Rep::zero(self.alg.quiver().clone(), self.alg.field());
        }
        let parts: Vec<Rep> = idx.iter().map(|&i| self.modules[i].rep.clone()).collect();
        Rep::sum(&parts).expect("same quiver")
    }
}
