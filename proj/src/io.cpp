#include "pnil/io.hpp"

#include <fstream>
#include <sstream>

namespace pnil {

namespace {

json fq_to_json(const Gf& F, const Fq& v) {
    if (F.e() == 1) return json(v[0]);
    json a = json::array();
    for (u32 w : v) a.push_back(w);
    return a;
}

Fq fq_from_json(const Gf& F, const json& j, const std::string& field) {
    if (j.is_number_integer()) {
        long long v = j.get<long long>();
        v %= (long long)F.p();
        if (v < 0) v += F.p();
        return F.from_int(u64(v));
    }
    if (j.is_array()) {
        if (j.size() != F.e()) throw SchemaError(field, "coefficient width mismatch");
        std::vector<u32> w;
        for (const auto& x : j) {
            if (!x.is_number_integer()) throw SchemaError(field, "expected integer coordinate");
            long long v = x.get<long long>() % (long long)F.p();
            if (v < 0) v += F.p();
            w.push_back(u32(v));
        }
        return F.from_words(w);
    }
    throw SchemaError(field, "expected integer or coordinate array");
}

json mat_to_json(const Mat& A) {
    const Gf& F = A.field();
    json rows = json::array();
    for (size_t i = 0; i < A.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < A.cols(); ++j) row.push_back(fq_to_json(F, A.get(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Mat mat_from_json(const Gf& F, const json& j, size_t rows, size_t cols, const std::string& field) {
    if (!j.is_array() || j.size() != rows) throw SchemaError(field, "expected " + std::to_string(rows) + " rows");
    Mat A(F, rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw SchemaError(field, "row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
        for (size_t c = 0; c < cols; ++c) A.set(i, c, fq_from_json(F, j[i][c], field));
    }
    return A;
}

}  // namespace

json module_to_json(const Module& M) {
    const Gf& F = M.field();
    json j;
    j["p"] = F.p();
    if (F.e() > 1) j["ext_degree"] = F.e();
    j["dim"] = M.dim();
    j["x"] = mat_to_json(M.x());
    j["y"] = mat_to_json(M.y());
    if (M.graded()) j["grading"] = M.grading();
    if (!M.name().empty()) j["name"] = M.name();
    return j;
}

Module module_from_json(const json& j) {
    if (!j.contains("p") || !j["p"].is_number_unsigned()) throw SchemaError("p", "missing or not a positive integer");
    u32 p = j["p"].get<u32>();
    u32 e = 1;
    if (j.contains("ext_degree")) {
        if (!j["ext_degree"].is_number_unsigned()) throw SchemaError("ext_degree", "not a positive integer");
        e = j["ext_degree"].get<u32>();
    }
    const Gf& F = Gf::get(p, e);
    if (!j.contains("dim") || !j["dim"].is_number_unsigned()) throw SchemaError("dim", "missing or not a nonnegative integer");
    size_t n = j["dim"].get<size_t>();
    if (!j.contains("x")) throw SchemaError("x", "missing");
    if (!j.contains("y")) throw SchemaError("y", "missing");
    Mat X = mat_from_json(F, j["x"], n, n, "x");
    Mat Y = mat_from_json(F, j["y"], n, n, "y");
    std::optional<std::vector<int>> grading;
    if (j.contains("grading")) {
        if (!j["grading"].is_array() || j["grading"].size() != n)
            throw SchemaError("grading", "expected an array of dim integers");
        std::vector<int> g;
        for (const auto& x : j["grading"]) {
            if (!x.is_number_integer()) throw SchemaError("grading", "expected integers");
            g.push_back(x.get<int>());
        }
        grading = g;
    }
    std::string name = j.value("name", std::string{});
    return Module::make(F, std::move(X), std::move(Y), std::move(grading), std::move(name));
}

json sl2_to_json(const Sl2Module& N) {
    const Gf& F = N.field();
    json j;
    j["p"] = F.p();
    if (F.e() > 1) j["ext_degree"] = F.e();
    j["dim"] = N.dim();
    j["e"] = mat_to_json(N.e());
    j["f"] = mat_to_json(N.f());
    j["h"] = mat_to_json(N.h());
    if (!N.name().empty()) j["name"] = N.name();
    return j;
}

Sl2Module sl2_from_json(const json& j) {
    if (!j.contains("p") || !j["p"].is_number_unsigned()) throw SchemaError("p", "missing or not a positive integer");
    u32 p = j["p"].get<u32>();
    u32 e = j.value("ext_degree", 1u);
    const Gf& F = Gf::get(p, e);
    if (!j.contains("dim") || !j["dim"].is_number_unsigned()) throw SchemaError("dim", "missing");
    size_t n = j["dim"].get<size_t>();
    for (const char* key : {"e", "f", "h"})
        if (!j.contains(key)) throw SchemaError(key, "missing");
    Mat E = mat_from_json(F, j["e"], n, n, "e");
    Mat Fo = mat_from_json(F, j["f"], n, n, "f");
    Mat H = mat_from_json(F, j["h"], n, n, "h");
    return Sl2Module::make(F, std::move(E), std::move(Fo), std::move(H), j.value("name", std::string{}));
}

json form_to_json(const BinaryForm& f) {
    const Gf& F = f.field();
    json a = json::array();
    for (size_t i = 0; i <= f.degree(); ++i) a.push_back(fq_to_json(F, f.coeff(i)));
    return a;
}

BinaryForm form_from_json(const json& j, const Gf& F) {
    if (!j.is_array() || j.empty()) throw SchemaError("form", "expected a nonempty coefficient array");
    BinaryForm f(F, j.size() - 1);
    for (size_t i = 0; i < j.size(); ++i) f.set_coeff(i, fq_from_json(F, j[i], "form"));
    return f;
}

json form_matrix_to_json(const FormMatrix& m) {
    json j;
    j["p"] = m.field().p();
    if (m.field().e() > 1) j["ext_degree"] = m.field().e();
    j["deg"] = m.degree();
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t c = 0; c < m.cols(); ++c) row.push_back(form_to_json(m.at(i, c)));
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j;
}

FormMatrix form_matrix_from_json(const json& j) {
    if (!j.contains("p")) throw SchemaError("p", "missing");
    const Gf& F = Gf::get(j["p"].get<u32>(), j.value("ext_degree", 1u));
    if (!j.contains("deg")) throw SchemaError("deg", "missing");
    size_t deg = j["deg"].get<size_t>();
    const json& rows = j.at("entries");
    size_t nr = rows.size(), nc = nr ? rows[0].size() : 0;
    FormMatrix m(F, nr, nc, deg);
    for (size_t i = 0; i < nr; ++i) {
        if (rows[i].size() != nc) throw SchemaError("entries", "ragged rows");
        for (size_t c = 0; c < nc; ++c) {
            BinaryForm f = form_from_json(rows[i][c], F);
            if (f.degree() != deg) throw SchemaError("entries", "entry degree mismatch");
            m.at(i, c) = f;
        }
    }
    return m;
}

json jordan_type_to_json(const JordanType& t) {
    json j;
    j["p"] = t.p;
    j["multiplicities"] = t.mult;
    j["pretty"] = t.to_string();
    return j;
}

namespace {

const char* kind_name(CertKind k) {
    switch (k) {
        case CertKind::ConstantJRank: return "constant-j-rank";
        case CertKind::CJT: return "constant-jordan-type";
        case CertKind::EIP: return "equal-images";
        case CertKind::EKP: return "equal-kernels";
        case CertKind::Sl2CJT: return "sl2-constant-jordan-type";
        case CertKind::Sl2EIP: return "sl2-equal-images";
    }
    return "?";
}

}  // namespace

json certificate_to_json(const Certificate& c) {
    json j;
    j["kind"] = kind_name(c.kind);
    j["p"] = c.p;
    j["dim"] = c.dim;
    j["seed"] = c.seed;
    j["domain"] = c.domain;
    j["verdict"] = c.verdict;
    if (c.kind == CertKind::EIP) j["class"] = c.eip_class;
    if (!c.rad_dims.empty()) j["rad_dims"] = c.rad_dims;
    json ranks = json::array();
    for (const auto& rc : c.ranks) {
        json r;
        r["j"] = rc.j;
        r["generic_rank"] = rc.generic_rank;
        r["constant"] = rc.constant;
        r["pivot_minor"] = form_to_json(rc.pivot_minor);
        json factors = json::array();
        for (const auto& f : rc.factors) {
            json ff;
            ff["factor"] = form_to_json(f.factor);
            ff["multiplicity"] = f.multiplicity;
            factors.push_back(ff);
        }
        r["factors"] = factors;
        json evals = json::array();
        for (const auto& dp : rc.evaluations) {
            json ev;
            ev["factor"] = form_to_json(dp.factor);
            ev["rank"] = dp.rank_at;
            ev["dropped"] = dp.dropped;
            if (dp.rational) {
                ev["a0"] = fq_to_json(Gf::get(c.p, 1), dp.a0);
                ev["b0"] = fq_to_json(Gf::get(c.p, 1), dp.b0);
            }
            evals.push_back(ev);
        }
        r["root_evaluations"] = evals;
        ranks.push_back(r);
    }
    j["powers"] = ranks;
    if (!c.kernel_constant.empty()) {
        json ks = json::array();
        for (size_t i = 0; i < c.kernel_constant.size(); ++i) {
            json k;
            k["j"] = i + 1;
            k["constant"] = bool(c.kernel_constant[i]);
            k["kernel_dim"] = c.kernels[i].rows();
            ks.push_back(k);
        }
        j["kernels"] = ks;
    }
    if (!c.image_constant.empty()) {
        json is = json::array();
        for (size_t i = 0; i < c.image_constant.size(); ++i) {
            json k;
            k["j"] = i + 1;
            k["constant"] = bool(c.image_constant[i]);
            k["image_dim"] = c.images[i].rows();
            is.push_back(k);
        }
        j["images"] = is;
    }
    return j;
}

json resolution_to_json(const Resolution& r) {
    json j;
    j["p"] = r.p;
    j["ranks"] = r.ranks;
    j["generation_degrees"] = r.degrees;
    json diffs = json::array();
    for (size_t s = 0; s < r.diff.size(); ++s) {
        json d = json::array();
        for (const auto& row : r.diff[s]) {
            json rr = json::array();
            for (const auto& el : row) rr.push_back(el.c);
            d.push_back(rr);
        }
        diffs.push_back(d);
    }
    j["differentials"] = diffs;
    return j;
}

json slice_to_json(const ComponentSlice& s) {
    json j;
    j["width"] = s.width;
    j["height"] = s.height;
    j["window_consistent"] = s.window_consistent;
    json verts = json::array();
    for (const auto& v : s.vertices) {
        json vj;
        vj["m"] = v.m;
        vj["quasi_length"] = v.r;
        vj["name"] = v.mod.name();
        vj["dim"] = v.mod.dim();
        vj["jordan_type"] = v.jt.to_string();
        vj["eip"] = v.eip;
        vj["ekp"] = v.ekp;
        if (v.eip) vj["eip_class"] = v.eip_class;
        verts.push_back(vj);
    }
    j["vertices"] = verts;
    return j;
}

std::string slice_to_dot(const ComponentSlice& s) {
    std::ostringstream os;
    os << "digraph ar_slice {\n  rankdir=BT;\n  node [shape=box];\n";
    auto id = [](long m, size_t r) {
        std::string ms = m < 0 ? "m" + std::to_string(-m) : std::to_string(m);
        return "v_" + ms + "_" + std::to_string(r);
    };
    for (const auto& v : s.vertices) {
        os << "  " << id(v.m, v.r) << " [label=\"" << v.mod.name() << "\\ndim " << v.mod.dim()
           << "\\n" << v.jt.to_string() << (v.eip ? "\\nEIP" : "") << (v.ekp ? "\\nEKP" : "")
           << "\"";
        if (v.eip) os << " style=filled fillcolor=lightblue";
        os << "];\n";
    }
    for (const auto& v : s.vertices) {
        // sectional arrows (m, r+1) -> (m, r) and (m, r) -> (m-1, r+1)
        if (s.at(v.m, v.r + 1)) os << "  " << id(v.m, v.r + 1) << " -> " << id(v.m, v.r) << ";\n";
        if (s.at(v.m - 1, v.r + 1)) os << "  " << id(v.m, v.r) << " -> " << id(v.m - 1, v.r + 1) << ";\n";
        // dashed tau edges
        if (s.at(v.m + 1, v.r))
            os << "  " << id(v.m, v.r) << " -> " << id(v.m + 1, v.r) << " [style=dashed, constraint=false];\n";
    }
    os << "}\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

}  // namespace pnil
