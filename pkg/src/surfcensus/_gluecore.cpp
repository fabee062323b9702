// Compiled core of the polygon-gluing map generator.
//
// Mirrors MapGenerator in gluing.py step for step; the Python version is
// kept as the reference implementation and for cross-checks in the tests.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <chrono>
#include <cstring>
#include <set>
#include <string>
#include <stdexcept>
#include <vector>

namespace py = pybind11;

namespace {

constexpr int MAXS = 192;   // sides
constexpr int MAXP = 96;    // polygons
constexpr int MAXK = 64;    // polygon size
constexpr int ANTI = 1;
constexpr int PARA = -1;

struct State {
    int nsides = 0, npoly = 0;
    int nverts = 0, nfree = 0, nglued = 0;
    int nrem = 0, rem_excess = 0;
    int size[MAXP], base[MAXP];
    int poly[MAXS], mate[MAXS], mode[MAXS];
    int parent[MAXS], csize[MAXS];
    int link[2 * MAXS];
    int remaining[MAXK];
};

struct Budget {};

inline int find(const int* parent, int c) {
    while (parent[c] != c) c = parent[c];
    return c;
}


// Bounded out-degree orientation used for the (3, alpha)-sparsity prune.
struct Orient {
    int n;
    int out[MAXS][3];
    int deg[MAXS];
    int insert(int a, int b) {
        if (deg[a] < 3) { out[a][deg[a]++] = b; return 1; }
        if (deg[b] < 3) { out[b][deg[b]++] = a; return 1; }
        int prev[MAXS];
        for (int i = 0; i < n; ++i) prev[i] = -2;
        int queue[MAXS], qh = 0, qt = 0;
        prev[a] = -1; prev[b] = -1;
        queue[qt++] = a; queue[qt++] = b;
        while (qh < qt) {
            int x = queue[qh++];
            for (int i = 0; i < deg[x]; ++i) {
                int y = out[x][i];
                if (prev[y] != -2) continue;
                prev[y] = x;
                if (deg[y] < 3) {
                    int z = y;
                    while (prev[z] != -1) {
                        int p = prev[z];
                        for (int k = 0; k < deg[p]; ++k)
                            if (out[p][k] == z) { out[p][k] = out[p][--deg[p]]; break; }
                        out[z][deg[z]++] = p;
                        z = p;
                    }
                    if (deg[a] < 3) out[a][deg[a]++] = b;
                    else out[b][deg[b]++] = a;
                    return 1;
                }
                queue[qt++] = y;
            }
        }
        return 0;
    }
};

// True when the simple graph (n, eu, ew) is (3, alpha)-sparse; for
// alpha > 3 only vertex sets of size >= 3 are constrained.
bool sparse_ok(int n, int m, const int* eu, const int* ew, int alpha) {
    static thread_local Orient base, work;
    base.n = n;
    for (int i = 0; i < n; ++i) base.deg[i] = 0;
    for (int i = 0; i < m; ++i)
        if (!base.insert(eu[i], ew[i])) return false;
    if (alpha <= 0) return true;
    static thread_local unsigned char adj[MAXS * MAXS];
    if (alpha > 3) {
        std::memset(adj, 0, (size_t)n * n);
        for (int i = 0; i < m; ++i) adj[eu[i] * n + ew[i]] = adj[ew[i] * n + eu[i]] = 1;
    }
    auto copy_base = [&]() {
        work.n = n;
        std::memcpy(work.deg, base.deg, sizeof(int) * n);
        std::memcpy(work.out, base.out, sizeof(int) * 3 * n);
    };
    for (int i = 0; i < m; ++i) {
        int u = eu[i], w = ew[i];
        if (alpha <= 3) {
            copy_base();
            for (int c = 0; c < alpha; ++c)
                if (!work.insert(u, w)) return false;
            continue;
        }
        int per = alpha / 3, rest = alpha - 3 * per;
        for (int x = 0; x < n; ++x) {
            if (x == u || x == w || !(adj[u * n + x] || adj[w * n + x])) continue;
            copy_base();
            int pairs[3][2] = {{u, w}, {w, x}, {u, x}};
            for (int p = 0; p < 3; ++p)
                for (int c = 0; c < per; ++c)
                    if (!work.insert(pairs[p][0], pairs[p][1])) return false;
            for (int c = 0; c < rest; ++c)
                if (!work.insert(u, w)) return false;
        }
    }
    return true;
}

class Generator {
public:
    int v, target_eg, euler_char;
    bool orientable, allow_para;
    int rule;  // 0 = vertex, 1 = side
    int sparse_alpha = 0;  // prune partial maps that are not (3, alpha)-sparse
    int filter = 0;        // 0 all maps, 1 no contractible edge, 2 tight, 3 tight and minimal
    int alpha = 6;
    long long unique = 0, members = 0;
    long long budget_nodes;
    double budget_seconds;
    long long nodes = 0, leaves = 0;
    bool exhausted = true;
    std::set<std::string> seen;
    std::vector<std::pair<std::vector<int>, std::vector<std::vector<int>>>> found;
    std::chrono::steady_clock::time_point t0;

    int qcorner(const State& st, int s) const {
        int p = st.poly[s];
        int b = st.base[p];
        return b + (s - b + 1) % st.size[p];
    }
    int end_corner(const State& st, int x) const {
        int s = x >> 1;
        return (x & 1) ? qcorner(st, s) : s;
    }
    static void unite(State& st, int a, int b) {
        a = find(st.parent, a);
        b = find(st.parent, b);
        if (a == b) return;
        if (st.csize[a] < st.csize[b]) std::swap(a, b);
        st.parent[b] = a;
        st.csize[a] += st.csize[b];
    }
    static int add_polygon(State& st, int k) {
        if (st.npoly >= MAXP || st.nsides + k > MAXS) throw std::length_error("map too large");
        int p = st.npoly++;
        int b = st.nsides;
        st.size[p] = k;
        st.base[p] = b;
        for (int j = 0; j < k; ++j) {
            int s = b + j;
            st.poly[s] = p;
            st.mate[s] = -1;
            st.mode[s] = 0;
            st.parent[s] = s;
            st.csize[s] = 1;
            st.link[2 * s] = st.link[2 * s + 1] = -1;
        }
        st.nsides += k;
        return b;
    }

    void attach(const State& src, State& st, int s, int k) {
        st = src;
        st.remaining[k]--;
        st.nrem--;
        st.rem_excess -= k - 2;
        int b = add_polygon(st, k);
        int ps = s, qs = qcorner(st, s);
        st.mate[s] = b;
        st.mate[b] = s;
        st.mode[s] = st.mode[b] = ANTI;
        int x = st.link[2 * s], y = st.link[2 * s + 1];
        st.link[2 * s] = st.link[2 * s + 1] = -1;
        st.link[x] = 2 * (b + 1);
        st.link[2 * (b + 1)] = x;
        int last = b + k - 1;
        st.link[y] = 2 * last + 1;
        st.link[2 * last + 1] = y;
        for (int j = 2; j < k; ++j) {
            st.link[2 * (b + j - 1) + 1] = 2 * (b + j);
            st.link[2 * (b + j)] = 2 * (b + j - 1) + 1;
        }
        unite(st, b, qs);
        unite(st, b + 1, ps);
        st.nverts += k - 2;
        st.nfree += k - 2;
        st.nglued += 2;
    }

    void glue(const State& src, State& st, int s, int t, int md) {
        st = src;
        int* link = st.link;
        int e4[4] = {2 * s, 2 * s + 1, 2 * t, 2 * t + 1};
        int g4[4];
        if (md == ANTI) {
            g4[0] = 2 * t + 1; g4[1] = 2 * t; g4[2] = 2 * s + 1; g4[3] = 2 * s;
        } else {
            g4[0] = 2 * t; g4[1] = 2 * t + 1; g4[2] = 2 * s; g4[3] = 2 * s + 1;
        }
        auto gi = [&](int x) { for (int i = 0; i < 4; ++i) if (e4[i] == x) return i; return -1; };
        int before = 0;
        for (int i = 0; i < 4; ++i) {
            int y = link[e4[i]];
            int j = gi(y);
            if (j < 0 || j > i) before++;  // count each chain once
        }
        bool seen4[4] = {false, false, false, false};
        int after = 0;
        int nl = 0, newl[4][2];
        for (int i = 0; i < 4; ++i) {
            if (seen4[i]) continue;
            after++;
            seen4[i] = true;
            int x = e4[i];
            int ends[2], ne = 0;
            bool cyc = false;
            for (int pass = 0; pass < 2 && !cyc; ++pass) {
                int cur = x;
                bool lk = (pass == 0);
                while (true) {
                    int nxt = lk ? link[cur] : g4[gi(cur)];
                    if (nxt == x) { cyc = true; break; }
                    int j = gi(nxt);
                    if (j < 0) { ends[ne++] = nxt; break; }
                    seen4[j] = true;
                    cur = nxt;
                    lk = !lk;
                }
            }
            if (!cyc) { newl[nl][0] = ends[0]; newl[nl][1] = ends[1]; nl++; }
        }
        for (int i = 0; i < 4; ++i) link[e4[i]] = -1;
        for (int i = 0; i < nl; ++i) {
            link[newl[i][0]] = newl[i][1];
            link[newl[i][1]] = newl[i][0];
        }
        for (int i = 0; i < 4; ++i)
            if (e4[i] < g4[i]) unite(st, end_corner(st, e4[i]), end_corner(st, g4[i]));
        st.mate[s] = t;
        st.mate[t] = s;
        st.mode[s] = st.mode[t] = md;
        st.nverts += after - before;
        st.nfree -= 2;
        st.nglued += 2;
    }

    int boundary_count(const State& st) const {
        static thread_local bool mark[2 * MAXS];
        int n2 = 2 * st.nsides;
        std::memset(mark, 0, n2);
        int b = 0;
        for (int x = 0; x < n2; ++x) {
            if (st.link[x] < 0 || mark[x]) continue;
            b++;
            int cur = x;
            while (!mark[cur]) {
                mark[cur] = mark[cur ^ 1] = true;
                cur = st.link[cur ^ 1];
            }
        }
        return b;
    }

    bool prune(const State& st) const {
        if (st.nverts - st.nfree > v || st.nverts + st.rem_excess < v) return false;
        if (st.nfree == 0 && st.nrem > 0) return false;
        int roots[MAXS];
        for (int c = 0; c < st.nsides; ++c) roots[c] = find(st.parent, c);
        // compact class ids
        int cid[MAXS];
        std::fill(cid, cid + st.nsides, -1);
        int ncls = 0;
        for (int c = 0; c < st.nsides; ++c)
            if (cid[roots[c]] < 0) cid[roots[c]] = ncls++;
        if (st.nfree > 0) {
            bool open[MAXS] = {false};
            int nopen = 0;
            for (int x = 0; x < 2 * st.nsides; ++x) {
                if (st.link[x] < 0) continue;
                int r = cid[roots[end_corner(st, x)]];
                if (!open[r]) { open[r] = true; nopen++; }
            }
            if (ncls - nopen > v) return false;
        } else if (ncls > v) {
            return false;
        }
        // per class pair: bit 0..1 free count (saturating at 3), bit 2 glued
        static thread_local unsigned char cnt[MAXS * MAXS];
        std::memset(cnt, 0, (size_t)ncls * ncls);
        for (int s = 0; s < st.nsides; ++s) {
            int t = st.mate[s];
            if (t >= 0 && t < s) continue;
            int a = cid[roots[s]], c = cid[roots[qcorner(st, s)]];
            if (a == c) return false;
            if (a > c) std::swap(a, c);
            unsigned char& q = cnt[a * ncls + c];
            if (t < 0) {
                if (q & 4) return false;
                int f = (q & 3) + 1;
                if (f >= 3) return false;
                q = (unsigned char)((q & ~3) | f);
            } else {
                if (q) return false;  // second glued edge, or a free side already there
                q = 4;
            }
        }
        int chi = st.nverts - (st.nglued / 2 + st.nfree) + st.npoly;
        int b = st.nfree ? boundary_count(st) : 0;
        if (2 - chi - b > target_eg) return false;
        if (sparse_alpha > 0) {
            // glued edges survive into the final graph and corner classes only
            // merge, so a violated count here stays violated
            int eu[MAXS], ew[MAXS], m = 0;
            for (int s = 0; s < st.nsides; ++s) {
                int t = st.mate[s];
                if (t > s) { eu[m] = cid[roots[s]]; ew[m] = cid[roots[qcorner(st, s)]]; m++; }
            }
            if (!sparse_ok(ncls, m, eu, ew, sparse_alpha)) return false;
        }
        return true;
    }

    int choose(const State& st) const {
        int best = -1, bestsz = -1;
        for (int x = 0; x < 2 * st.nsides; ++x) {
            if (st.link[x] < 0) continue;
            if (rule == 1) return x >> 1;
            int r = find(st.parent, end_corner(st, x));
            if (st.csize[r] > bestsz) { bestsz = st.csize[r]; best = x; }
        }
        return best >> 1;
    }

    void tick() {
        nodes++;
        if (budget_nodes >= 0 && nodes > budget_nodes) throw Budget();
        if (budget_seconds >= 0 && (nodes & 4095) == 0) {
            double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (el > budget_seconds) throw Budget();
        }
    }

    void dfs(const State& st) {
        tick();
        if (st.nfree == 0) { leaf(st); return; }
        int s = choose(st);
        State child;
        for (int k = MAXK - 1; k >= 3; --k) {
            if (st.remaining[k] <= 0) continue;
            attach(st, child, s, k);
            if (prune(child)) dfs(child);
        }
        for (int t = 0; t < st.nsides; ++t) {
            if (t == s || st.mate[t] >= 0) continue;
            glue(st, child, s, t, ANTI);
            if (prune(child)) dfs(child);
            if (allow_para) {
                glue(st, child, s, t, PARA);
                if (prune(child)) dfs(child);
            }
        }
    }

    bool polygon_orientable(const State& st) const {
        std::vector<int> o(st.npoly, 0);
        o[0] = 1;
        std::vector<int> stack = {0};
        while (!stack.empty()) {
            int p = stack.back();
            stack.pop_back();
            for (int j = 0; j < st.size[p]; ++j) {
                int s = st.base[p] + j, t = st.mate[s];
                int q = st.poly[t];
                int want = o[p] * st.mode[s];
                if (o[q] == 0) { o[q] = want; stack.push_back(q); }
                else if (o[q] != want) return false;
            }
        }
        return true;
    }

    void leaf(const State& st) {
        leaves++;
        if (st.nrem > 0 || st.nverts != v) return;
        int chi = st.nverts - st.nglued / 2 + st.npoly;
        if (chi != euler_char) return;
        if (!orientable && polygon_orientable(st)) return;
        int ns = st.nsides;
        std::vector<int> roots(ns), label(ns, -1);
        int nv = 0;
        for (int c = 0; c < ns; ++c) {
            roots[c] = find(st.parent, c);
            if (label[roots[c]] < 0) label[roots[c]] = nv++;
        }
        std::vector<int> cls(ns);
        for (int c = 0; c < ns; ++c) cls[c] = label[roots[c]];
        // edges and darts
        int m = ns / 2;
        std::vector<int> eid(ns, -1), tail(2 * m), sign(m);
        int ne = 0;
        for (int s = 0; s < ns; ++s) {
            if (st.mate[s] > s) {
                eid[s] = eid[st.mate[s]] = ne;
                tail[2 * ne] = cls[s];
                tail[2 * ne + 1] = cls[qcorner(st, s)];
                ne++;
            }
        }
        auto primary = [&](int s) { return st.mate[s] > s; };
        // dart of side s at its P end (endq=0) or Q end (endq=1)
        auto dart_at = [&](int s, int endq) {
            int i = eid[s];
            if (primary(s)) return 2 * i + endq;
            if (st.mode[s] == ANTI) return 2 * i + (1 - endq);
            return 2 * i + endq;
        };
        std::vector<char> bef(2 * ns, 0);
        std::vector<std::vector<int>> rot(nv);
        for (int c0 = 0; c0 < ns; ++c0) {
            int u = cls[c0];
            if (!rot[u].empty()) continue;
            int c = c0, dir = 1;
            do {
                int s, endq;
                if (dir == 1) { s = c; endq = 0; }
                else {
                    int p = st.poly[c], b = st.base[p];
                    s = b + (c - b - 1 + st.size[p]) % st.size[p];
                    endq = 1;
                }
                rot[u].push_back(dart_at(s, endq));
                bef[2 * s + endq] = 1;
                int t = st.mate[s];
                if ((st.mode[s] == ANTI) == (dir == 1)) {
                    // land on the Q end of t, continue forwards
                    c = qcorner(st, t);
                    bef[2 * t + 1] = 0;
                    dir = 1;
                } else {
                    c = t;
                    bef[2 * t] = 0;
                    dir = -1;
                }
            } while (c != c0);
        }
        for (int s = 0; s < ns; ++s)
            if (primary(s)) sign[eid[s]] = (bef[2 * s] != bef[2 * s + 1]) ? 1 : -1;
        std::vector<int> code = canonical(nv, m, rot, tail, sign);
        std::string key;
        key.reserve(code.size() * 2);
        for (int c : code) { key.push_back((char)(c >> 8)); key.push_back((char)(c & 255)); }
        if (!seen.insert(key).second) return;
        unique++;
        if (filter && !passes(st, nv, m, cls, tail)) return;
        std::vector<std::vector<int>> polys(st.npoly);
        for (int p = 0; p < st.npoly; ++p)
            for (int j = 0; j < st.size[p]; ++j) polys[p].push_back(cls[st.base[p] + j]);
        found.emplace_back(code, polys);
    }

    // Family filters applied to each new map before it is reported.
    bool passes(const State& st, int nv, int m, const std::vector<int>& cls,
                const std::vector<int>& tail) {
        std::vector<int> eu(m), ew(m);
        for (int i = 0; i < m; ++i) { eu[i] = tail[2 * i]; ew[i] = tail[2 * i + 1]; }
        if (filter >= 2) {
            if (3 * nv - m != alpha) return false;
            if (!sparse_ok(nv, m, eu.data(), ew.data(), alpha)) return false;
            members++;
            if (filter == 2) return true;
        }
        std::vector<unsigned char> adj((size_t)nv * nv, 0);
        for (int i = 0; i < m; ++i) adj[eu[i] * nv + ew[i]] = adj[ew[i] * nv + eu[i]] = 1;
        auto apex = [&](int p, int x, int y) {
            for (int j = 0; j < 3; ++j) {
                int c = cls[st.base[p] + j];
                if (c != x && c != y) return c;
            }
            return -1;
        };
        int i = 0;
        for (int s = 0; s < st.nsides; ++s) {
            int t = st.mate[s];
            if (t < s) continue;
            int x = tail[2 * i], y = tail[2 * i + 1];
            i++;
            int p = st.poly[s], q = st.poly[t];
            if (st.size[p] != 3 || st.size[q] != 3 || nv - 1 < 3) continue;
            int a = apex(p, x, y), b = apex(q, x, y);
            if (a < 0 || b < 0 || a == b) continue;
            int common = 0;
            for (int z = 0; z < nv; ++z) common += adj[x * nv + z] && adj[y * nv + z];
            if (common != 2) continue;
            // contractible edge
            if (filter == 1) return false;
            std::vector<int> relabel(nv);
            for (int z = 0, k = 0; z < nv; ++z) relabel[z] = (z == y) ? -1 : k++;
            relabel[y] = relabel[x];
            std::vector<unsigned char> have((size_t)nv * nv, 0);
            std::vector<int> cu, cw;
            for (int j = 0; j < m; ++j) {
                int a2 = relabel[eu[j]], b2 = relabel[ew[j]];
                if (a2 == b2) continue;
                if (a2 > b2) std::swap(a2, b2);
                if (have[a2 * nv + b2]) continue;
                have[a2 * nv + b2] = 1;
                cu.push_back(a2);
                cw.push_back(b2);
            }
            if (sparse_ok(nv - 1, (int)cu.size(), cu.data(), cw.data(), alpha)) return false;
        }
        return true;
    }

    static std::vector<int> canonical(int n, int m, const std::vector<std::vector<int>>& rot,
                                      const std::vector<int>& tail, const std::vector<int>& sign) {
        std::vector<int> pos(2 * m), dtail(2 * m);
        for (int u = 0; u < n; ++u)
            for (size_t i = 0; i < rot[u].size(); ++i) { pos[rot[u][i]] = (int)i; dtail[rot[u][i]] = u; }
        std::vector<int> best, cur;
        std::vector<int> num(n), entry(n), orient(n), order;
        bool have = false;
        for (int r = 0; r < 2 * m; ++r) {
            for (int eps0 : {1, -1}) {
                std::fill(num.begin(), num.end(), -1);
                order.clear();
                cur.clear();
                int v0 = dtail[r];
                num[v0] = 0; entry[v0] = r; orient[v0] = eps0;
                order.push_back(v0);
                bool less = !have, worse = false;
                size_t k = 0;
                auto emit = [&](int it) {
                    if (!less) {
                        int b = best[k];
                        if (it > b) { worse = true; return; }
                        if (it < b) less = true;
                    }
                    cur.push_back(it);
                    k++;
                };
                for (size_t idx = 0; idx < order.size() && !worse; ++idx) {
                    int u = order[idx];
                    const std::vector<int>& ru = rot[u];
                    int deg = (int)ru.size();
                    int o = orient[u];
                    int p0 = pos[entry[u]];
                    emit(deg);
                    for (int j = 0; j < deg && !worse; ++j) {
                        int d = ru[(((p0 + o * j) % deg) + deg) % deg];
                        int x = d ^ 1;
                        int w = dtail[x];
                        int s = sign[d >> 1];
                        if (num[w] < 0) {
                            num[w] = (int)order.size();
                            entry[w] = x;
                            orient[w] = o * s;
                            order.push_back(w);
                        }
                        int ow = orient[w];
                        int dw = (int)rot[w].size();
                        int rel = ((((pos[x] - pos[entry[w]]) * ow) % dw) + dw) % dw;
                        emit(num[w]);
                        if (worse) break;
                        emit(rel);
                        if (worse) break;
                        emit(o * ow * s == 1 ? 1 : 0);
                    }
                }
                if (!worse && (!have || cur < best)) { best = cur; have = true; }
            }
        }
        std::vector<int> out = {n, m};
        out.insert(out.end(), best.begin(), best.end());
        return out;
    }
};

py::dict generate(int v, std::vector<int> sizes, int euler_char, bool orientable, int rule,
                  long long budget_nodes, double budget_seconds, int sparse_alpha,
                  int filter, int alpha) {
    Generator gen;
    gen.filter = filter;
    gen.alpha = alpha;
    gen.sparse_alpha = sparse_alpha;
    gen.v = v;
    gen.euler_char = euler_char;
    gen.target_eg = 2 - euler_char;
    gen.orientable = orientable;
    gen.allow_para = !orientable;
    gen.rule = rule;
    gen.budget_nodes = budget_nodes;
    gen.budget_seconds = budget_seconds;
    gen.t0 = std::chrono::steady_clock::now();
    std::sort(sizes.rbegin(), sizes.rend());
    State st;
    std::memset(&st, 0, sizeof(State));
    for (int k : sizes) {
        if (k < 3 || k >= MAXK) throw std::invalid_argument("face size out of range");
        st.remaining[k]++;
        st.nrem++;
        st.rem_excess += k - 2;
    }
    int k = sizes[0];
    st.remaining[k]--;
    st.nrem--;
    st.rem_excess -= k - 2;
    Generator::add_polygon(st, k);
    for (int j = 0; j < k; ++j) {
        st.link[2 * j + 1] = 2 * ((j + 1) % k);
        st.link[2 * ((j + 1) % k)] = 2 * j + 1;
    }
    st.nverts = k;
    st.nfree = k;
    {
        py::gil_scoped_release release;
        try {
            if (gen.prune(st)) gen.dfs(st);
        } catch (const Budget&) {
            gen.exhausted = false;
        }
    }
    py::list maps;
    for (auto& f : gen.found) maps.append(py::make_tuple(f.first, f.second));
    py::dict out;
    out["maps"] = maps;
    out["nodes"] = gen.nodes;
    out["leaves"] = gen.leaves;
    out["exhaustive"] = gen.exhausted;
    out["unique"] = gen.unique;
    out["members"] = gen.members;
    return out;
}

}  // namespace

PYBIND11_MODULE(_gluecore, m) {
    m.doc() = "Compiled polygon-gluing map generator";
    m.def("generate", &generate, py::arg("v"), py::arg("sizes"), py::arg("euler_char"),
          py::arg("orientable"), py::arg("rule") = 0, py::arg("budget_nodes") = -1,
          py::arg("budget_seconds") = -1.0, py::arg("sparse_alpha") = 0,
          py::arg("filter") = 0, py::arg("alpha") = 6);
    m.def("is_sparse", [](int n, std::vector<std::pair<int, int>> edges, int alpha) {
        if (n > MAXS) throw std::invalid_argument("too many vertices");
        std::vector<int> eu, ew;
        for (auto& e : edges) { eu.push_back(e.first); ew.push_back(e.second); }
        if (alpha > 3 && n < 3) return true;
        return sparse_ok(n, (int)eu.size(), eu.data(), ew.data(), alpha);
    }, py::arg("n"), py::arg("edges"), py::arg("alpha"));
}
