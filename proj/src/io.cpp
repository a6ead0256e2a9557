#include "tropws/io.hpp"

#include <fstream>
#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>

namespace trop {

namespace {

struct LineReader {
    std::vector<std::string> lines;
    size_t pos = 0;

    explicit LineReader(const std::string& text) {
        std::istringstream is(text);
        std::string l;
        while (std::getline(is, l)) lines.push_back(l);
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw input_error("line " + std::to_string(pos) + ": " + msg);
    }
    bool eof() {
        skip_blank();
        return pos >= lines.size();
    }
    void skip_blank() {
        while (pos < lines.size()) {
            const std::string& l = lines[pos];
            size_t i = l.find_first_not_of(" \t\r");
            if (i == std::string::npos || l[i] == '#')
                ++pos;
            else
                break;
        }
    }
    std::vector<std::string> next() {
        skip_blank();
        if (pos >= lines.size()) fail("unexpected end of input");
        std::istringstream is(lines[pos++]);
        std::vector<std::string> toks;
        std::string t;
        while (is >> t) toks.push_back(t);
        return toks;
    }
    std::vector<std::string> peek() {
        skip_blank();
        if (pos >= lines.size()) return {};
        std::istringstream is(lines[pos]);
        std::vector<std::string> toks;
        std::string t;
        while (is >> t) toks.push_back(t);
        return toks;
    }
};

Int parse_int(const std::string& s, LineReader& r) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        r.fail("not an integer: '" + s + "'");
    }
}

int parse_count(const std::string& s, LineReader& r) {
    Int v = parse_int(s, r);
    if (v < 0 || !v.fits_sint_p()) r.fail("bad count: " + s);
    return int(v.get_si());
}

IVec parse_vec(const std::vector<std::string>& toks, int n, LineReader& r) {
    if (int(toks.size()) != n) r.fail("expected " + std::to_string(n) + " entries");
    IVec v(n);
    for (int i = 0; i < n; ++i) v[i] = parse_int(toks[i], r);
    return v;
}

IMat read_matrix_block(LineReader& r) {
    auto h = r.next();
    if (h.size() != 3 || h[0] != "matrix") r.fail("expected 'matrix <rows> <cols>'");
    int rows = parse_count(h[1], r), cols = parse_count(h[2], r);
    IMat m(rows, cols);
    for (int i = 0; i < rows; ++i) m.set_row(i, parse_vec(r.next(), cols, r));
    return m;
}

void write_matrix_block(std::ostream& os, const IMat& m) {
    os << "matrix " << m.rows() << ' ' << m.cols() << '\n';
    for (int i = 0; i < m.rows(); ++i) os << vec_str(m.row(i)) << '\n';
}

// shared ray-indexed block reader for fans and cycles
struct RayBlocks {
    std::vector<IVec> rays;
    std::vector<IVec> lineality;
};

RayBlocks read_ray_blocks(LineReader& r, int n) {
    RayBlocks rb;
    auto h = r.next();
    if (h.size() != 2 || h[0] != "rays") r.fail("expected 'rays <count>'");
    int m = parse_count(h[1], r);
    for (int i = 0; i < m; ++i) rb.rays.push_back(parse_vec(r.next(), n, r));
    auto nxt = r.peek();
    if (!nxt.empty() && nxt[0] == "lineality") {
        r.next();
        if (nxt.size() != 2) r.fail("expected 'lineality <count>'");
        int l = parse_count(nxt[1], r);
        for (int i = 0; i < l; ++i) rb.lineality.push_back(parse_vec(r.next(), n, r));
    }
    return rb;
}

TropicalCycle read_cycle_block(LineReader& r) {
    auto h = r.next();
    if (h.size() != 2 || h[0] != "tropical-cycle" || h[1] != "v1")
        r.fail("expected 'tropical-cycle v1'");
    auto ha = r.next();
    if (ha.size() != 2 || ha[0] != "ambient") r.fail("expected 'ambient <n>'");
    int n = parse_count(ha[1], r);
    auto hd = r.next();
    if (hd.size() != 2 || hd[0] != "dim") r.fail("expected 'dim <k>'");
    int k = parse_count(hd[1], r);
    RayBlocks rb = read_ray_blocks(r, n);
    auto hc = r.next();
    if (hc.size() != 2 || hc[0] != "cones") r.fail("expected 'cones <count>'");
    int c = parse_count(hc[1], r);
    std::vector<WCone> cones;
    for (int i = 0; i < c; ++i) {
        auto toks = r.next();
        size_t wpos = 0;
        while (wpos < toks.size() && toks[wpos] != "w") ++wpos;
        if (wpos + 2 != toks.size()) r.fail("cone line must end with 'w <weight>'");
        std::vector<IVec> gens;
        for (size_t t = 0; t < wpos; ++t) {
            int idx = parse_count(toks[t], r);
            if (idx < 0 || idx >= int(rb.rays.size())) r.fail("ray index out of range");
            gens.push_back(rb.rays[idx]);
        }
        Int w = parse_int(toks[wpos + 1], r);
        Cone cone = make_cone(n, gens, rb.lineality);
        if (cone.dim != k) r.fail("cone of dimension " + std::to_string(cone.dim) +
                                  " in a " + std::to_string(k) + "-cycle");
        cones.push_back({std::move(cone), w});
    }
    return make_cycle(n, k, std::move(cones));
}

void write_cycle_block(std::ostream& os, const TropicalCycle& c) {
    os << "tropical-cycle v1\n";
    os << "ambient " << c.n << '\n';
    os << "dim " << c.k << '\n';
    // lineality is encoded as +- ray pairs so that cones may differ in it
    std::vector<IVec> rays;
    std::map<std::string, int> index;
    auto ray_id = [&](const IVec& v) {
        std::string k = vec_str(v);
        auto it = index.find(k);
        if (it != index.end()) return it->second;
        int id = int(rays.size());
        rays.push_back(v);
        index.emplace(std::move(k), id);
        return id;
    };
    std::vector<std::vector<int>> cone_rays;
    for (const WCone& wc : c.cones) {
        std::vector<int> ids;
        for (const IVec& r : wc.cone.rays) ids.push_back(ray_id(r));
        for (const IVec& l : wc.cone.lin) {
            ids.push_back(ray_id(l));
            ids.push_back(ray_id(neg(l)));
        }
        cone_rays.push_back(std::move(ids));
    }
    os << "rays " << rays.size() << '\n';
    for (const IVec& r : rays) os << vec_str(r) << '\n';
    os << "cones " << c.cones.size() << '\n';
    for (size_t i = 0; i < c.cones.size(); ++i) {
        for (size_t t = 0; t < cone_rays[i].size(); ++t) {
            if (t) os << ' ';
            os << cone_rays[i][t];
        }
        if (!cone_rays[i].empty()) os << ' ';
        os << "w " << c.cones[i].weight.get_str() << '\n';
    }
}

}  // namespace

std::string serialize_matrix(const IMat& m) {
    std::ostringstream os;
    write_matrix_block(os, m);
    return os.str();
}

IMat parse_matrix(const std::string& text) {
    LineReader r(text);
    IMat m = read_matrix_block(r);
    if (!r.eof()) r.fail("trailing content after matrix block");
    return m;
}

std::string serialize_polytope(const LatticePolytope& p) {
    std::ostringstream os;
    os << "polytope " << p.n << ' ' << p.vertices.size() << '\n';
    for (const IVec& v : p.vertices) os << vec_str(v) << '\n';
    return os.str();
}

LatticePolytope parse_polytope(const std::string& text) {
    LineReader r(text);
    auto h = r.next();
    if (h.size() != 3 || h[0] != "polytope") r.fail("expected 'polytope <n> <count>'");
    int n = parse_count(h[1], r), c = parse_count(h[2], r);
    std::vector<IVec> pts;
    for (int i = 0; i < c; ++i) pts.push_back(parse_vec(r.next(), n, r));
    if (!r.eof()) r.fail("trailing content after polytope block");
    return make_polytope(n, pts);
}

std::string serialize_points(const MonomialSupport& a) {
    std::ostringstream os;
    os << "points " << a.n << ' ' << a.points.size() << '\n';
    for (const IVec& v : a.points) os << vec_str(v) << '\n';
    return os.str();
}

MonomialSupport parse_points(const std::string& text) {
    LineReader r(text);
    auto h = r.next();
    if (h.size() != 3 || h[0] != "points") r.fail("expected 'points <n> <count>'");
    MonomialSupport a;
    a.n = parse_count(h[1], r);
    int c = parse_count(h[2], r);
    std::map<std::string, bool> seen;
    for (int i = 0; i < c; ++i) {
        IVec v = parse_vec(r.next(), a.n, r);
        if (seen.count(vec_str(v))) r.fail("duplicate point");
        seen[vec_str(v)] = true;
        a.points.push_back(std::move(v));
    }
    if (!r.eof()) r.fail("trailing content after points block");
    return a;
}

namespace {

Fan read_fan_block(LineReader& r) {
    auto h = r.next();
    if (h.size() != 3 || h[0] != "fan") r.fail("expected 'fan <n> <count>'");
    Fan f;
    f.n = parse_count(h[1], r);
    int c = parse_count(h[2], r);
    RayBlocks rb = read_ray_blocks(r, f.n);
    for (int i = 0; i < c; ++i) {
        auto toks = r.next();
        if (toks.empty() || toks[0] != "rays") r.fail("expected cone line 'rays i...'");
        std::vector<IVec> gens;
        for (size_t t = 1; t < toks.size(); ++t) {
            int idx = parse_count(toks[t], r);
            if (idx < 0 || idx >= int(rb.rays.size())) r.fail("ray index out of range");
            gens.push_back(rb.rays[idx]);
        }
        f.cones.push_back(make_cone(f.n, gens, rb.lineality));
    }
    return f;
}

void write_fan_block(std::ostream& os, const Fan& f) {
    std::vector<IVec> rays;
    std::map<std::string, int> index;
    auto ray_id = [&](const IVec& v) {
        std::string k = vec_str(v);
        auto it = index.find(k);
        if (it != index.end()) return it->second;
        int id = int(rays.size());
        rays.push_back(v);
        index.emplace(std::move(k), id);
        return id;
    };
    std::vector<std::vector<int>> cone_rays;
    for (const Cone& c : f.cones) {
        std::vector<int> ids;
        for (const IVec& r : c.rays) ids.push_back(ray_id(r));
        for (const IVec& l : c.lin) {
            ids.push_back(ray_id(l));
            ids.push_back(ray_id(neg(l)));
        }
        cone_rays.push_back(std::move(ids));
    }
    os << "fan " << f.n << ' ' << f.cones.size() << '\n';
    os << "rays " << rays.size() << '\n';
    for (const IVec& r : rays) os << vec_str(r) << '\n';
    for (const auto& ids : cone_rays) {
        os << "rays";
        for (int id : ids) os << ' ' << id;
        os << '\n';
    }
}

}  // namespace

std::string serialize_fan(const Fan& f) {
    std::ostringstream os;
    write_fan_block(os, f);
    return os.str();
}

Fan parse_fan(const std::string& text) {
    LineReader r(text);
    Fan f = read_fan_block(r);
    if (!r.eof()) r.fail("trailing content after fan block");
    return f;
}

std::string serialize_cycle(const TropicalCycle& c) {
    std::ostringstream os;
    write_cycle_block(os, c);
    return os.str();
}

TropicalCycle parse_cycle(const std::string& text) {
    LineReader r(text);
    TropicalCycle c = read_cycle_block(r);
    if (!r.eof()) r.fail("trailing content after cycle block");
    return c;
}

namespace {

void write_class_like(std::ostream& os, int n, const std::string& dimu,
                      const std::map<int, TropicalCycle>& by_codim) {
    os << "tropical-class v1\n";
    os << "ambient " << n << '\n';
    os << "dimU " << dimu << '\n';
    for (int j = 0; j <= n; ++j) {
        os << "piece " << j << '\n';
        auto it = by_codim.find(j);
        if (it == by_codim.end() || it->second.is_zero())
            os << "zero\n";
        else
            write_cycle_block(os, it->second);
    }
}

void read_class_like(LineReader& r, int& n, std::string& dimu,
                     std::map<int, TropicalCycle>& by_codim) {
    auto h = r.next();
    if (h.size() != 2 || h[0] != "tropical-class" || h[1] != "v1")
        r.fail("expected 'tropical-class v1'");
    auto ha = r.next();
    if (ha.size() != 2 || ha[0] != "ambient") r.fail("expected 'ambient <n>'");
    n = parse_count(ha[1], r);
    auto hd = r.next();
    if (hd.size() != 2 || hd[0] != "dimU") r.fail("expected 'dimU <m|unset>'");
    dimu = hd[1];
    while (!r.eof()) {
        auto hp = r.peek();
        if (hp.empty() || hp[0] != "piece") break;
        r.next();
        if (hp.size() != 2) r.fail("expected 'piece <j>'");
        int j = parse_count(hp[1], r);
        if (j < 0 || j > n) r.fail("piece codimension out of range");
        auto body = r.peek();
        if (!body.empty() && body[0] == "zero") {
            r.next();
            continue;
        }
        TropicalCycle c = read_cycle_block(r);
        if (c.n != n) r.fail("piece has wrong ambient rank");
        if (!c.is_zero() && c.k != n - j) r.fail("piece dimension mismatch");
        if (!c.is_zero()) by_codim[j] = std::move(c);
    }
}

}  // namespace

std::string serialize_class(const TropicalClass& a) {
    std::ostringstream os;
    write_class_like(os, a.n, a.dim_U ? std::to_string(*a.dim_U) : "unset", a.pieces);
    return os.str();
}

TropicalClass parse_class(const std::string& text) {
    LineReader r(text);
    int n;
    std::string dimu;
    std::map<int, TropicalCycle> pieces;
    read_class_like(r, n, dimu, pieces);
    TropicalClass a;
    a.n = n;
    if (dimu != "unset") {
        LineReader tmp("");
        a.dim_U = parse_count(dimu, tmp);
    }
    for (auto& [j, c] : pieces) a.set_piece(j, std::move(c));
    return a;
}

std::string serialize_grading(const TropGrading& g) {
    std::map<int, TropicalCycle> by_codim;
    for (const auto& [d, c] : g.pieces) by_codim[g.n - d] = c;
    std::ostringstream os;
    write_class_like(os, g.n, std::to_string(g.dim_U), by_codim);
    return os.str();
}

TropGrading parse_grading(const std::string& text) {
    LineReader r(text);
    int n;
    std::string dimu;
    std::map<int, TropicalCycle> pieces;
    read_class_like(r, n, dimu, pieces);
    if (dimu == "unset")
        throw input_error("grading file must declare dimU");
    TropGrading g;
    g.n = n;
    {
        LineReader tmp("");
        g.dim_U = parse_count(dimu, tmp);
    }
    for (auto& [j, c] : pieces) g.set_piece(n - j, std::move(c));
    return g;
}

std::string serialize_pair(const SemistablePair& p) {
    std::ostringstream os;
    os << "semistable-pair v1\n";
    os << "dilation " << p.dilation.get_str() << '\n';
    write_fan_block(os, p.sigma);
    write_fan_block(os, p.sigma_prime);
    write_matrix_block(os, p.p);
    os << "profile " << p.profile.size() << '\n';
    for (const LadderColumn& c : p.profile)
        os << vec_str(c.v) << ' ' << c.a << ' ' << c.b << '\n';
    return os.str();
}

SemistablePair parse_pair(const std::string& text) {
    LineReader r(text);
    auto h = r.next();
    if (h.size() != 2 || h[0] != "semistable-pair" || h[1] != "v1")
        r.fail("expected 'semistable-pair v1'");
    auto hd = r.next();
    if (hd.size() != 2 || hd[0] != "dilation") r.fail("expected 'dilation <m>'");
    SemistablePair p;
    p.dilation = parse_int(hd[1], r);
    p.sigma = read_fan_block(r);
    p.sigma_prime = read_fan_block(r);
    p.p = read_matrix_block(r);
    auto hp = r.next();
    if (hp.size() != 2 || hp[0] != "profile") r.fail("expected 'profile <count>'");
    int c = parse_count(hp[1], r);
    for (int i = 0; i < c; ++i) {
        auto toks = r.next();
        if (toks.size() != 4) r.fail("profile line: vx vy a b");
        LadderColumn col;
        col.v = IVec{parse_int(toks[0], r), parse_int(toks[1], r)};
        col.a = to_long(parse_int(toks[2], r));
        col.b = to_long(parse_int(toks[3], r));
        p.profile.push_back(std::move(col));
    }
    if (!r.eof()) r.fail("trailing content after semistable pair");
    return p;
}

std::string serialize_oracle_request(const IMat& projection, const TropicalCycle& c) {
    std::ostringstream os;
    write_matrix_block(os, projection);
    write_cycle_block(os, c);
    return os.str();
}

void parse_oracle_request(const std::string& text, IMat& projection, TropicalCycle& c) {
    LineReader r(text);
    projection = read_matrix_block(r);
    c = read_cycle_block(r);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write file: " + path);
    out << content;
}

std::string digest(const std::string& content) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : content) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

std::string detect_kind(const std::string& text) {
    LineReader r(text);
    auto toks = r.peek();
    if (toks.empty()) return "";
    return toks[0];
}

}  // namespace trop
