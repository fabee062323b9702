// Superface scanner.
//
// A superface is described by a set F of faces of G together with a set E of
// edges whose two sides both lie in F, such that F is connected through E.
// Removing E gives a subgraph K; the union of F, the open edges of E and the
// vertices all of whose edges lie in E is a face of K.  The scanner visits
// every such pair once (connected edge sets of the dual multigraph rooted at
// their smallest face, plus single faces) and evaluates the counts used by
// the girth and sparsity checks.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace py = pybind11;
typedef uint64_t u64;

static inline int popc(u64 x) { return __builtin_popcountll(x); }
static inline u64 bit(int i) { return (u64)1 << i; }

struct Scan {
    int n, m, nf, alpha, cap;
    std::vector<int> tail, sign, pos, deg, fos;  // fos: face of state 2d + (eps < 0)
    std::vector<std::vector<int>> rot;
    std::vector<u64> vinc, vface, fedges, fverts, sides;
    std::vector<int> excess, fa, fb, par;
    u64 allF = 0, allE = 0, allV = 0;
    std::vector<int> stamp;
    int cur = 0;

    long long budget = -1, visited = 0;
    bool exhausted = true;
    int limit = 0;

    // tallies
    long long nsuper = 0, ndisc = 0, nbal = 0, nsimple = 0, nnonorient = 0;
    long long planar_len_viol = 0, planar_ext_viol = 0, planar_mismatch = 0;
    long long viol_all = 0, viol_bal = 0, ncritical = 0;
    long long bal_simple = 0, bal_simple_mismatch = 0, shifted_form_mismatch = 0;
    long long gen_simple = 0, gen_simple_mismatch = 0, gen_nonsimple = 0, gen_nonsimple_mismatch = 0;
    long long gen_norm_mismatch = 0, kappa_differs = 0, ext_viol = 0;
    long long sparsity_viol = 0, addition_checked = 0, addition_fail = 0, genus_bad = 0;
    u64 crit_edges = 0, crit_edges_bal = 0;
    std::vector<std::tuple<u64, u64, int>> girth_wit, sparse_wit, crit_wit, planar_wit, planar_crit;

    int succ(int d, int e) const {
        const std::vector<int>& r = rot[tail[d]];
        int k = (int)r.size();
        return r[((pos[d] + e) % k + k) % k];
    }

    struct Walks {
        int s = 0, len = 0;
        bool simple = true;
        u64 bedges = 0, bverts = 0;
    };

    // Boundary walks of the face group F of K = G - R.
    Walks trace(u64 F, u64 R) {
        Walks w;
        if (++cur == 0x7fffffff) {
            std::fill(stamp.begin(), stamp.end(), 0);
            cur = 1;
        }
        for (int i = 0; i < m; ++i) {
            if (R & bit(i)) continue;
            if (!(sides[i] & F)) continue;
            for (int d = 2 * i; d <= 2 * i + 1; ++d)
                for (int e0 = 1; e0 >= -1; e0 -= 2) {
                    int st = 2 * d + (e0 < 0);
                    if (stamp[st] == cur || !(F & bit(fos[st]))) continue;
                    u64 vm = 0, em = 0;
                    int len = 0;
                    bool simple = true;
                    int dd = d, ee = e0;
                    while (true) {
                        int s = 2 * dd + (ee < 0);
                        if (stamp[s] == cur) break;
                        stamp[s] = cur;
                        len++;
                        int v = tail[dd], ed = dd >> 1;
                        if (vm & bit(v)) simple = false;
                        if (em & bit(ed)) simple = false;
                        vm |= bit(v);
                        em |= bit(ed);
                        int x = dd ^ 1;
                        int ew = ee * sign[ed];
                        stamp[2 * x + (ew > 0)] = cur;
                        int y = succ(x, ew);
                        while (R & bit(y >> 1)) y = succ(y, ew);
                        dd = y;
                        ee = ew;
                    }
                    if (w.bverts & vm) simple = false;
                    w.bverts |= vm;
                    w.bedges |= em;
                    w.s++;
                    w.len += len;
                    if (!simple) w.simple = false;
                }
        }
        return w;
    }

    bool orientable(u64 F, u64 E) {
        // colour faces so that faces glued along E induce opposite directions
        std::vector<int> col(nf, 0);
        int start = __builtin_ctzll(F);
        col[start] = 1;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            u64 es = fedges[f] & E;
            while (es) {
                int i = __builtin_ctzll(es);
                es &= es - 1;
                int g = fa[i] == f ? fb[i] : fa[i];
                int want = par[i] ? -col[f] : col[f];
                if (fa[i] == fb[i]) {
                    if (par[i]) return false;
                    continue;
                }
                if (col[g] == 0) {
                    col[g] = want;
                    stack.push_back(g);
                } else if (col[g] != want) {
                    return false;
                }
            }
        }
        return true;
    }

    int components(u64 V, u64 R) {
        std::vector<int> par(n);
        for (int v = 0; v < n; ++v) par[v] = v;
        auto find = [&](int x) {
            while (par[x] != x) x = par[x] = par[par[x]];
            return x;
        };
        int k = popc(V);
        for (int i = 0; i < m; ++i) {
            if (R & bit(i)) continue;
            int a = find(tail[2 * i]), b = find(tail[2 * i + 1]);
            if (a != b) {
                par[a] = b;
                k--;
            }
        }
        return k;
    }

    int freedom(u64 V, u64 Em) const { return 3 * popc(V) - popc(Em); }

    void process(u64 F, u64 E) {
        if (F == allF) return;
        u64 vint = 0;
        for (int v = 0; v < n; ++v) {
            int c = popc(E & vinc[v]);
            if (deg[v] - c == 1) return;
            if (c == deg[v]) vint |= bit(v);
        }
        if (budget >= 0 && visited >= budget) {
            exhausted = false;
            return;
        }
        visited++;
        nsuper++;
        int chi = popc(vint) - popc(E) + popc(F);
        int H = 0;
        u64 uv = 0, ue = 0;
        for (u64 t = F; t; t &= t - 1) {
            int f = __builtin_ctzll(t);
            H += excess[f];
            uv |= fverts[f];
            ue |= fedges[f];
        }
        Walks w = trace(F, E);
        bool orient = orientable(F, E);
        if (!orient) nnonorient++;
        int eg = 2 - chi - w.s;
        if (eg < 0 || (orient && eg % 2)) genus_bad++;
        int gU = orient ? eg / 2 : eg;

        // complement components
        u64 rest = allF & ~F;
        std::vector<int> comp(nf, -1);
        std::vector<u64> cv, ce;
        for (u64 t = rest; t; t &= t - 1) {
            int f0 = __builtin_ctzll(t);
            if (comp[f0] >= 0) continue;
            int id = (int)cv.size();
            cv.push_back(0);
            ce.push_back(0);
            std::vector<int> stack{f0};
            comp[f0] = id;
            while (!stack.empty()) {
                int f = stack.back();
                stack.pop_back();
                cv[id] |= fverts[f];
                ce[id] |= fedges[f];
                for (u64 es = fedges[f]; es; es &= es - 1) {
                    int i = __builtin_ctzll(es);
                    if (sides[i] & F) continue;
                    int g = fa[i] == f ? fb[i] : fa[i];
                    if (comp[g] < 0) {
                        comp[g] = id;
                        stack.push_back(g);
                    }
                }
            }
        }
        int kappa = (int)cv.size();
        int fsum = 0;
        for (int i = 0; i < kappa; ++i) fsum += freedom(cv[i], ce[i]);
        int fU = freedom(uv, ue);
        int fext = 3 * (n - popc(vint)) - (m - popc(E));

        bool balanced = kappa == 1;
        if (balanced) nbal++;
        if (w.simple) nsimple++;

        // disc superfaces: planar type closed walks
        if (chi == 1 && w.s == 1) {
            ndisc++;
            bool a = w.len - 3 >= H, b = fext >= alpha;
            if (!a) planar_len_viol++;
            if (!b) planar_ext_viol++;
            if (a != b) planar_mismatch++;
            if (!a && (int)planar_wit.size() < limit) planar_wit.emplace_back(F, E, w.len);
            if (a && H > 0 && w.len - 3 == H && (int)planar_crit.size() < limit)
                planar_crit.emplace_back(F, E, w.len);
        }

        // girth inequality: sum(|d|-3) >= H - 6 (g_r(U) + s - 1), i.e. len >= H + 3 chi
        int rhs = H + 3 * chi;
        bool ineq = w.len >= rhs;
        bool in_cap = cap < 0 || gU <= cap;
        if (in_cap) {
            if (!ineq) {
                viol_all++;
                if (balanced) viol_bal++;
                if ((int)girth_wit.size() < limit)
                    girth_wit.emplace_back(F, E, (int)balanced);
            }
            // single faces and complements of one triangle are always critical
            bool trivial = E == 0 || (popc(rest) == 1 && excess[__builtin_ctzll(rest)] == 0);
            if (w.len == rhs && !trivial) {
                ncritical++;
                crit_edges |= w.bedges;
                if (balanced) crit_edges_bal |= w.bedges;
                if ((int)crit_wit.size() < limit) crit_wit.emplace_back(F, E, (int)balanced);
            }
        }
        // components of M - U: the graph left after deleting the inside of U
        int kn = components(~vint & allV, E);
        if ((fext >= kn * alpha) != (w.len >= rhs + alpha * (kn - 1))) gen_norm_mismatch++;
        if (kn != kappa) kappa_differs++;
        bool gen = fsum >= kappa * alpha;
        bool ineqk = w.len >= rhs + alpha * (kappa - 1);
        if (w.simple) {
            gen_simple++;
            if (gen != ineqk || kn != kappa) gen_simple_mismatch++;
        } else {
            gen_nonsimple++;
            if (gen != ineqk) gen_nonsimple_mismatch++;
        }
        if (balanced && w.simple) {
            bal_simple++;
            bool fw = fsum >= alpha;
            if (fw != ineq) bal_simple_mismatch++;
            bool shifted = w.len >= H + 3 * chi + (6 - alpha);
            if (shifted != fw) shifted_form_mismatch++;
            // addition formula, with the complement traced as a superface
            u64 ew = 0;
            for (int i = 0; i < m; ++i)
                if (!(sides[i] & F)) ew |= bit(i);
            u64 vw = 0;
            for (int v = 0; v < n; ++v)
                if (!(vface[v] & F)) vw |= bit(v);
            int chiW = popc(vw) - popc(ew) + popc(rest);
            Walks ww = trace(rest, ew);
            int chiM = n - m + nf;
            addition_checked++;
            // 2 - chi_M = (2 - chi_U - s) + (2 - chi_W - s_W) + 2 (s - 1)
            if (2 - chiM != (2 - chi - w.s) + (2 - chiW - ww.s) + 2 * (w.s - 1) || ww.s != w.s)
                addition_fail++;
        }
        if (fext < alpha) ext_viol++;
        if (fU < alpha) {
            sparsity_viol++;
            if ((int)sparse_wit.size() < limit) sparse_wit.emplace_back(F, E, fU);
        }
    }

    void grow(int f0, u64 allowed, u64 F, u64 E, u64 X) {
        process(F, E);
        if (!exhausted) return;
        u64 cand = 0;
        for (u64 t = F; t; t &= t - 1) cand |= fedges[__builtin_ctzll(t)];
        cand &= allowed & ~E & ~X;
        u64 X2 = X;
        while (cand) {
            int i = __builtin_ctzll(cand);
            cand &= cand - 1;
            grow(f0, allowed, F | sides[i], E | bit(i), X2);
            if (!exhausted) return;
            X2 |= bit(i);
        }
    }

    void run() {
        for (int f0 = 0; f0 < nf && exhausted; ++f0) {
            u64 allowed = 0;
            for (int i = 0; i < m; ++i)
                if (fa[i] >= f0 && fb[i] >= f0) allowed |= bit(i);
            grow(f0, allowed, bit(f0), 0, 0);
        }
    }
};

py::dict scan(int n, const std::vector<std::vector<int>>& rotation, const std::vector<int>& signs,
              const std::vector<int>& face_of_state, const std::vector<std::vector<int>>& faces,
              int alpha, int cap, long long budget, int limit) {
    Scan sc;
    sc.n = n;
    sc.m = (int)signs.size();
    sc.nf = (int)faces.size();
    if (n > 64 || sc.m > 64 || sc.nf > 64) throw std::invalid_argument("scanner limited to 64 vertices, edges and faces");
    sc.alpha = alpha;
    sc.cap = cap;
    sc.budget = budget;
    sc.limit = limit;
    sc.rot = rotation;
    sc.sign = signs;
    sc.fos = face_of_state;
    int nd = 2 * sc.m;
    sc.tail.assign(nd, 0);
    sc.pos.assign(nd, 0);
    sc.deg.assign(n, 0);
    sc.vinc.assign(n, 0);
    sc.vface.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        sc.deg[v] = (int)rotation[v].size();
        for (int k = 0; k < (int)rotation[v].size(); ++k) {
            int d = rotation[v][k];
            sc.tail[d] = v;
            sc.pos[d] = k;
            sc.vinc[v] |= bit(d >> 1);
        }
    }
    sc.fedges.assign(sc.nf, 0);
    sc.fverts.assign(sc.nf, 0);
    sc.excess.assign(sc.nf, 0);
    sc.fa.assign(sc.m, -1);
    sc.fb.assign(sc.m, -1);
    sc.par.assign(sc.m, 0);
    std::vector<int> first(sc.m, -1);
    for (int f = 0; f < sc.nf; ++f) {
        sc.excess[f] = (int)faces[f].size() - 3;
        for (int d : faces[f]) {
            int i = d >> 1;
            sc.fedges[f] |= bit(i);
            sc.fverts[f] |= bit(sc.tail[d]);
            sc.vface[sc.tail[d]] |= bit(f);
            if (first[i] < 0) {
                first[i] = d;
                sc.fa[i] = f;
            } else {
                sc.fb[i] = f;
                sc.par[i] = (first[i] == d);  // same direction twice
            }
        }
        sc.allF |= bit(f);
    }
    sc.sides.assign(sc.m, 0);
    for (int i = 0; i < sc.m; ++i) {
        if (sc.fb[i] < 0) throw std::invalid_argument("edge missing from face list");
        sc.sides[i] = bit(sc.fa[i]) | bit(sc.fb[i]);
        sc.allE |= bit(i);
    }
    sc.allV = n == 64 ? ~(u64)0 : bit(n) - 1;
    sc.stamp.assign(4 * sc.m, 0);
    {
        py::gil_scoped_release release;
        sc.run();
    }
    py::dict out;
    out["superfaces"] = sc.nsuper;
    out["discs"] = sc.ndisc;
    out["balanced"] = sc.nbal;
    out["simple"] = sc.nsimple;
    out["nonorientable"] = sc.nnonorient;
    out["planar_len_violations"] = sc.planar_len_viol;
    out["planar_ext_violations"] = sc.planar_ext_viol;
    out["planar_mismatch"] = sc.planar_mismatch;
    out["violations"] = sc.viol_all;
    out["balanced_violations"] = sc.viol_bal;
    out["critical"] = sc.ncritical;
    out["balanced_simple"] = sc.bal_simple;
    out["balanced_simple_mismatch"] = sc.bal_simple_mismatch;
    out["shifted_form_mismatch"] = sc.shifted_form_mismatch;
    out["general_simple"] = sc.gen_simple;
    out["general_simple_mismatch"] = sc.gen_simple_mismatch;
    out["general_nonsimple"] = sc.gen_nonsimple;
    out["general_nonsimple_mismatch"] = sc.gen_nonsimple_mismatch;
    out["normalized_mismatch"] = sc.gen_norm_mismatch;
    out["kappa_differs"] = sc.kappa_differs;
    out["exterior_violations"] = sc.ext_viol;
    out["sparsity_violations"] = sc.sparsity_viol;
    out["addition_checked"] = sc.addition_checked;
    out["addition_failures"] = sc.addition_fail;
    out["genus_errors"] = sc.genus_bad;
    out["critical_edges"] = sc.crit_edges;
    out["critical_edges_balanced"] = sc.crit_edges_bal;
    out["girth_witnesses"] = sc.girth_wit;
    out["sparsity_witnesses"] = sc.sparse_wit;
    out["critical_witnesses"] = sc.crit_wit;
    out["planar_witnesses"] = sc.planar_wit;
    out["planar_critical"] = sc.planar_crit;
    out["exhaustive"] = sc.exhausted;
    return out;
}

PYBIND11_MODULE(_girthcore, mod) {
    mod.doc() = "superface scanner";
    mod.def("scan", &scan, py::arg("n"), py::arg("rotation"), py::arg("signs"),
            py::arg("face_of_state"), py::arg("faces"), py::arg("alpha"), py::arg("cap") = -1,
            py::arg("budget") = -1, py::arg("limit") = 16);
}
