#include "cycroots/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cycroots/branches.hpp"
#include "cycroots/classify.hpp"
#include "cycroots/rootgen.hpp"
#include "cycroots/spectral.hpp"
#include "cycroots/structure.hpp"
#include "cycroots/verify.hpp"

namespace cycroots {

namespace {

using json = nlohmann::ordered_json;

// Twelve significant digits; -0 prints as 0.
double num(double x) {
    if (!std::isfinite(x)) {
        return x;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

json complex_json(Complex z) { return json::array({num(z.real()), num(z.imag())}); }

json matrix_json(const MatrixXc& m, bool real) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(real ? json(num(m(i, j).real())) : complex_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    json doc;
    doc["format"] = real ? "dense-real" : "dense-complex";
    doc["rows"] = m.rows();
    doc["cols"] = m.cols();
    doc["data"] = std::move(rows);
    return doc;
}

json one_based(const std::vector<std::vector<int>>& parts) {
    json out = json::array();
    for (const auto& part : parts) {
        json p = json::array();
        for (int v : part) {
            p.push_back(v + 1);
        }
        out.push_back(std::move(p));
    }
    return out;
}

// ---- input ----

Complex parse_scalar(const json& v, const std::string& where) {
    if (v.is_number()) {
        return {v.get<double>(), 0.0};
    }
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return {v[0].get<double>(), v[1].get<double>()};
    }
    throw InputError(where + ": expected a number or a [re, im] pair");
}

MatrixXc parse_rows(const json& data, const std::string& where, std::optional<Eigen::Index> rows,
                    std::optional<Eigen::Index> cols) {
    if (!data.is_array() || data.empty()) {
        throw InputError(where + ": expected a nonempty array of rows");
    }
    const auto r = static_cast<Eigen::Index>(data.size());
    if (rows && *rows != r) {
        throw InputError(where + ": declared " + std::to_string(*rows) + " rows, found " + std::to_string(r));
    }
    if (!data[0].is_array()) {
        throw InputError(where + "[0]: expected an array");
    }
    const auto c = cols ? *cols : static_cast<Eigen::Index>(data[0].size());
    MatrixXc m(r, c);
    for (Eigen::Index i = 0; i < r; ++i) {
        const auto& row = data[static_cast<std::size_t>(i)];
        const std::string rw = where + "[" + std::to_string(i) + "]";
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != c) {
            throw InputError(rw + ": expected " + std::to_string(c) + " entries");
        }
        for (Eigen::Index j = 0; j < c; ++j) {
            m(i, j) = parse_scalar(row[static_cast<std::size_t>(j)], rw + "[" + std::to_string(j) + "]");
        }
    }
    return m;
}

MatrixDocument parse_json_document(const json& j) {
    if (!j.is_object()) {
        throw InputError("document: expected a JSON object");
    }
    MatrixDocument doc;
    if (!j.contains("format") || !j["format"].is_string()) {
        throw InputError("format: missing or not a string");
    }
    doc.format = j["format"].get<std::string>();
    if (j.contains("name")) {
        if (!j["name"].is_string()) {
            throw InputError("name: expected a string");
        }
        doc.name = j["name"].get<std::string>();
    }
    auto dim = [&](const char* key) -> std::optional<Eigen::Index> {
        if (!j.contains(key)) {
            return std::nullopt;
        }
        if (!j[key].is_number_integer() || j[key].get<long long>() < 1) {
            throw InputError(std::string(key) + ": expected a positive integer");
        }
        return static_cast<Eigen::Index>(j[key].get<long long>());
    };
    if (doc.format == "dense-real" || doc.format == "dense-complex") {
        if (!j.contains("data")) {
            throw InputError("data: missing");
        }
        doc.matrix = parse_rows(j["data"], "data", dim("rows"), dim("cols"));
        if (doc.format == "dense-real") {
            for (Eigen::Index i = 0; i < doc.matrix.size(); ++i) {
                if (doc.matrix.data()[i].imag() != 0.0) {
                    throw InputError("data: dense-real documents take plain numbers");
                }
            }
        }
        doc.real = doc.matrix.imag().isZero(0.0);
    } else if (doc.format == "jordan-pair") {
        const auto n = dim("n");
        if (!j.contains("h") || !j["h"].is_number_integer() || j["h"].get<long long>() < 1) {
            throw InputError("h: expected a positive integer");
        }
        doc.h = static_cast<int>(j["h"].get<long long>());
        if (!j.contains("Z")) {
            throw InputError("Z: missing");
        }
        doc.Z = parse_rows(j["Z"], "Z", n, n);
        if (doc.Z.rows() != doc.Z.cols()) {
            throw InputError("Z: expected a square matrix");
        }
        if (!j.contains("blocks") || !j["blocks"].is_array()) {
            throw InputError("blocks: expected an array");
        }
        int total = 0;
        for (std::size_t b = 0; b < j["blocks"].size(); ++b) {
            const auto& blk = j["blocks"][b];
            const std::string where = "blocks[" + std::to_string(b) + "]";
            if (!blk.is_object() || !blk.contains("eigenvalue") || !blk.contains("size")) {
                throw InputError(where + ": expected {eigenvalue, size}");
            }
            if (!blk["size"].is_number_integer() || blk["size"].get<long long>() < 1) {
                throw InputError(where + ".size: expected a positive integer");
            }
            JordanBlock jb;
            jb.eigenvalue = parse_scalar(blk["eigenvalue"], where + ".eigenvalue");
            jb.size = static_cast<int>(blk["size"].get<long long>());
            total += jb.size;
            doc.blocks.push_back(jb);
        }
        if (total != doc.Z.rows()) {
            throw InputError("blocks: sizes sum to " + std::to_string(total) + " but Z has " +
                             std::to_string(doc.Z.rows()) + " columns");
        }
        const auto n_z = doc.Z.rows();
        MatrixXc jm = MatrixXc::Zero(n_z, n_z);
        Eigen::Index off = 0;
        for (const auto& jb : doc.blocks) {
            for (int i = 0; i < jb.size; ++i) {
                jm(off + i, off + i) = jb.eigenvalue;
                if (i + 1 < jb.size) {
                    jm(off + i, off + i + 1) = 1.0;
                }
            }
            off += jb.size;
        }
        Eigen::FullPivLU<MatrixXc> lu(doc.Z);
        if (!lu.isInvertible()) {
            throw InputError("Z: matrix is singular");
        }
        doc.matrix = doc.Z * jm * lu.inverse();
        doc.real = max_abs(MatrixXr(doc.matrix.imag())) <= 1e-12 * std::max(1.0, max_abs(doc.matrix));
    } else {
        throw InputError("format: unknown format '" + doc.format + "'");
    }
    return doc;
}

MatrixDocument parse_csv(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            const auto b = cell.find_first_not_of(" \t\r");
            const auto e = cell.find_last_not_of(" \t\r");
            if (b == std::string::npos) {
                throw InputError("line " + std::to_string(lineno) + ": empty cell");
            }
            const std::string token = cell.substr(b, e - b + 1);
            char* end = nullptr;
            const double v = std::strtod(token.c_str(), &end);
            if (end != token.c_str() + token.size()) {
                throw InputError("line " + std::to_string(lineno) + ": '" + token + "' is not a number");
            }
            row.push_back(v);
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw InputError("line " + std::to_string(lineno) + ": expected " + std::to_string(rows.front().size()) +
                             " entries, got " + std::to_string(row.size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw InputError("csv: no data rows");
    }
    MatrixDocument doc;
    doc.format = "dense-real";
    doc.matrix.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            doc.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
        }
    }
    return doc;
}

// ---- options ----

struct Settings {
    SpectralTolerances spectral;
    VerifyOptions verify;
    std::optional<double> root_tol;
};

MatrixXr require_real(const MatrixDocument& doc, const char* what) {
    const double scale = std::max(1.0, max_abs(doc.matrix));
    if (max_abs(MatrixXr(doc.matrix.imag())) > 1e-12 * scale) {
        throw PreconditionError(std::string(what) + ": matrix must be real");
    }
    return doc.matrix.real();
}

void require_square_doc(const MatrixDocument& doc) {
    if (doc.matrix.rows() != doc.matrix.cols()) {
        throw ShapeError("matrix is " + std::to_string(doc.matrix.rows()) + "x" + std::to_string(doc.matrix.cols()) +
                         ", expected square");
    }
}

CyclicJordanForm form_of(const MatrixDocument& doc, const Settings& s) {
    if (doc.format == "jordan-pair") {
        return from_jordan_pair(doc.Z, doc.blocks, *doc.h, s.spectral);
    }
    require_square_doc(doc);
    if (doc.real) {
        return eigendecompose(MatrixXr(doc.matrix.real()), s.spectral);
    }
    return eigendecompose(doc.matrix, s.spectral);
}

json selection_json(const BranchSelection& sel) {
    json out = json::array();
    for (const auto& t : sel.per_family) {
        out.push_back(t);
    }
    return out;
}

json violation_json(const std::optional<Violation>& v) {
    if (!v) {
        return nullptr;
    }
    return json{{"power", v->power}, {"row", v->row + 1}, {"col", v->col + 1}, {"value", num(v->value)}};
}

json verdict_json(const EnnVerdict& v) {
    json out;
    out["verdict"] = to_string(v.verdict);
    out["power_index"] = v.power_index_estimate ? json(*v.power_index_estimate) : json(nullptr);
    out["first_violation"] = violation_json(v.first_violation);
    out["k_max"] = v.k_max;
    out["reason"] = v.reason;
    return out;
}

json root_json(std::size_t index, const RootCandidate& r, const std::optional<EnnVerdict>& v) {
    json out;
    out["index"] = index;
    out["selection"] = selection_json(r.selection);
    out["real"] = r.is_real;
    out["residual"] = num(r.residual);
    if (v) {
        out["enn"] = verdict_json(*v);
    }
    out["matrix"] = matrix_json(r.X, r.is_real);
    return out;
}

json optional_int(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

// ---- subcommands ----

json cmd_analyze(const MatrixDocument& doc, const Settings& s) {
    require_square_doc(doc);
    json out;
    if (!doc.name.empty()) {
        out["name"] = doc.name;
    }
    const auto n = doc.matrix.rows();
    out["n"] = n;
    out["format"] = doc.format;
    const double scale = std::max(1.0, max_abs(doc.matrix));
    const bool real = max_abs(MatrixXr(doc.matrix.imag())) <= 1e-12 * scale;
    out["real"] = real;
    const MatrixXr re = doc.matrix.real();
    const bool nonneg = real && re.minCoeff() >= -1e-12 * scale;
    out["nonnegative"] = nonneg;
    const auto g = digraph_of(doc.matrix, relative_zero_tol(doc.matrix, s.verify.zero_tol));
    const bool strong = is_strongly_connected(g);
    out["irreducible"] = strong;
    if (strong) {
        const int h = index_of_imprimitivity(g);
        out["h"] = h;
        out["partition"] = one_based(cyclic_partition(g, h).parts());
        out["reducible_structure"] = nullptr;
    } else {
        out["h"] = nullptr;
        out["partition"] = nullptr;
        const auto rs = reducible_structure(g);
        json comps = one_based(rs.components);
        json blocks = json::array();
        for (const auto& comp : rs.components) {
            std::vector<Digraph::Arc> arcs;
            for (std::size_t a = 0; a < comp.size(); ++a) {
                for (std::size_t b = 0; b < comp.size(); ++b) {
                    if (g.has_arc(comp[a], comp[b])) {
                        arcs.emplace_back(static_cast<int>(a), static_cast<int>(b));
                    }
                }
            }
            const auto ci = cyclic_index(Digraph(static_cast<int>(comp.size()), arcs));
            blocks.push_back(ci ? json(*ci) : json(nullptr));
        }
        out["reducible_structure"] = {{"components", comps},
                                      {"block_cyclic_indices", blocks},
                                      {"completely_reducible", rs.completely_reducible}};
    }
    if (nonneg && strong) {
        const auto pf = verify_perron_frobenius(re);
        out["perron_frobenius"] = {{"all_pass", pf.all_pass()},
                                   {"rho", num(pf.rho)},
                                   {"h", pf.h},
                                   {"rho_positive_eigenvalue", pf.rho_positive_eigenvalue},
                                   {"positive_eigenvectors", pf.positive_eigenvectors},
                                   {"simple", pf.simple},
                                   {"peripheral_matches", pf.peripheral_matches},
                                   {"rotation_invariant", pf.rotation_invariant},
                                   {"failed", pf.failed}};
    } else {
        out["perron_frobenius"] = nullptr;
    }
    auto eig = real ? spectrum_of(re) : spectrum_of(doc.matrix);
    std::vector<std::pair<std::pair<double, double>, Complex>> keyed;
    for (auto z : eig.values) {
        keyed.push_back({{-num(std::abs(z)), num(arg_0_2pi(z))}, z});
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    json sp = json::array();
    for (const auto& k : keyed) {
        sp.push_back(complex_json(k.second));
    }
    out["spectrum"] = sp;
    try {
        const auto form = form_of(doc, s);
        json fams = json::array();
        for (std::size_t f = 0; f < form.families.size(); ++f) {
            fams.push_back({{"base_eigenvalue", complex_json(form.families[f].base_eigenvalue)},
                            {"block_size", form.families[f].block_size},
                            {"label", to_string(form.labels[f])}});
        }
        json zeros = json::array();
        for (auto b : form.zero_blocks) {
            zeros.push_back(form.blocks[b].size);
        }
        out["jordan_form"] = {{"h", form.h},
                              {"families", fams},
                              {"zero_blocks", zeros},
                              {"r1", form.r1},
                              {"r2", form.r2},
                              {"c", form.c},
                              {"c_pairs", form.complex_pairs},
                              {"derogatory", form.derogatory},
                              {"reconstruction_residual", num(form.reconstruction_residual())}};
    } catch (const Error& e) {
        out["jordan_form"] = nullptr;
        out["jordan_form_error"] = e.what();
    }
    return out;
}

json cmd_branches(int h, int p) {
    json out;
    out["h"] = h;
    out["p"] = p;
    out["gcd"] = gcd64(h, p);
    const auto t = unique_branch_tuple(h, p);
    out["exists"] = t.has_value();
    if (t) {
        const auto q = power_q(*t);
        out["j"] = t->j;
        out["E"] = exponent_set(*t);
        out["q"] = q.reduced;
        out["q_raw"] = q.raw;
    } else {
        out["j"] = nullptr;
        out["E"] = nullptr;
        out["q"] = nullptr;
        out["q_raw"] = nullptr;
    }
    return out;
}

json cmd_count(const MatrixDocument& doc, int p, const Settings& s) {
    const auto form = form_of(doc, s);
    json out;
    if (!form.nonsingular()) {
        const auto rep = classify_singular(form, p, 0, s.verify);
        const auto& cnt = rep.nonsingular_count;
        out["h"] = cnt.h;
        out["p"] = p;
        out["gcd_ok"] = cnt.gcd_ok;
        out["singular"] = true;
        json zs = rep.zero_block_sizes;
        out["zero_block_sizes"] = zs;
        out["nilpotent_root_exists"] = rep.nilpotent_root_exists;
        out["r1"] = cnt.r1;
        out["r2"] = cnt.r2;
        out["c"] = cnt.c;
        out["c_pairs"] = cnt.c_pairs;
        out["derogatory"] = cnt.derogatory;
        out["primary_roots"] = nullptr;
        out["enn_primary_roots"] = rep.nilpotent_root_exists ? optional_int(cnt.count) : json(0);
        out["rule"] = cnt.rule;
        out["diagnostic"] = rep.diagnostic;
        return out;
    }
    const auto cnt = count_enn_primary_roots(form, p);
    const auto ex = enn_root_exists(form, p);
    out["h"] = cnt.h;
    out["p"] = p;
    out["gcd_ok"] = cnt.gcd_ok;
    out["singular"] = false;
    out["r1"] = cnt.r1;
    out["r2"] = cnt.r2;
    out["c"] = cnt.c;
    out["c_pairs"] = cnt.c_pairs;
    out["derogatory"] = cnt.derogatory;
    out["primary_roots"] = optional_int(PrimarySelectionEnumerator(form, p).total());
    out["enn_primary_roots"] = optional_int(cnt.count);
    out["rule"] = cnt.rule;
    out["existence"] = ex.exists;
    out["existence_reason"] = ex.reason;
    return out;
}

json cmd_roots(const MatrixDocument& doc, int p, bool all, std::size_t cap, const Settings& s) {
    const auto form = form_of(doc, s);
    json out;
    out["p"] = p;
    out["h"] = form.h;
    out["mode"] = all ? "all" : "enn";
    json roots = json::array();
    if (all) {
        PrimarySelectionEnumerator it(form, p);
        BranchSelection sel;
        std::size_t k = 0;
        bool more = true;
        while (k < cap && (more = it.next(sel))) {
            const auto r = construct_root(form, sel, s.root_tol);
            roots.push_back(root_json(k, r, power_verdict(r.X, s.verify)));
            ++k;
        }
        out["total"] = optional_int(it.total());
        out["truncated"] = k == cap && it.total() && *it.total() > static_cast<std::int64_t>(cap);
        out["diagnostic"] = "";
    } else if (!form.nonsingular()) {
        const auto rep = classify_singular(form, p, cap, s.verify);
        for (std::size_t k = 0; k < rep.witnesses.size(); ++k) {
            roots.push_back(root_json(k, rep.witnesses[k], power_verdict(rep.witnesses[k].X, s.verify)));
        }
        out["total"] = rep.nilpotent_root_exists ? optional_int(rep.nonsingular_count.count) : json(0);
        out["truncated"] = rep.witnesses.size() == cap && cap > 0;
        out["diagnostic"] = rep.diagnostic;
    } else {
        const auto en = enumerate_enn_roots(form, p, cap, s.verify);
        for (std::size_t k = 0; k < en.roots.size(); ++k) {
            roots.push_back(root_json(k, en.roots[k], en.verdicts[k]));
        }
        out["total"] = optional_int(en.total);
        out["truncated"] = en.truncated;
        out["diagnostic"] = en.diagnostic;
    }
    out["emitted"] = roots.size();
    out["roots"] = std::move(roots);
    return out;
}

json cmd_verify(const MatrixDocument& doc, const MatrixDocument& root, int p, const Settings& s, bool& passes) {
    require_square_doc(doc);
    require_square_doc(root);
    if (doc.matrix.rows() != root.matrix.rows()) {
        throw ShapeError("root is " + std::to_string(root.matrix.rows()) + "x" + std::to_string(root.matrix.rows()) +
                         " but the matrix is " + std::to_string(doc.matrix.rows()) + "x" +
                         std::to_string(doc.matrix.rows()));
    }
    if (p < 1) {
        throw DomainError("p must be positive");
    }
    const auto n = doc.matrix.rows();
    MatrixXc xp = root.matrix;
    for (int i = 1; i < p; ++i) {
        xp = xp * root.matrix;
    }
    const double residual = inf_norm(MatrixXc(xp - doc.matrix));
    const double tol = s.root_tol ? *s.root_tol
                                  : 1e-8 * static_cast<double>(n) * std::max(1.0, inf_norm(doc.matrix));
    const auto v = power_verdict(root.matrix, s.verify);
    json out;
    out["p"] = p;
    out["n"] = n;
    out["residual"] = num(residual);
    out["tolerance"] = num(tol);
    out["is_root"] = residual <= tol;
    out["enn"] = verdict_json(v);
    passes = residual <= tol && v.verdict == Verdict::EventuallyNonnegative;
    out["passes"] = passes;
    return out;
}

json cmd_stochastic(const MatrixDocument& doc, int p) {
    require_square_doc(doc);
    const auto rep = stochastic_principal_root_check(require_real(doc, "stochastic-root"), p);
    json out;
    out["h"] = rep.h;
    out["p"] = rep.p;
    out["stochastic"] = rep.stochastic;
    out["reason"] = rep.reason;
    json sums = json::array();
    for (double x : rep.row_sums) {
        sums.push_back(num(x));
    }
    out["row_sums"] = sums;
    out["min_entry"] = num(rep.min_entry);
    out["max_imag"] = num(rep.max_imag);
    out["max_row_sum_error"] = num(rep.max_row_sum_error);
    const bool real = rep.max_imag <= 1e-12;
    out["root"] = matrix_json(rep.root, real);
    return out;
}

}  // namespace

MatrixDocument parse_matrix_document(const std::string& text, std::size_t index) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        throw InputError("document is empty");
    }
    if (text[first] != '{') {
        return parse_csv(text);
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("json: ") + e.what());
    }
    if (j.is_object() && j.contains("roots") && !j.contains("format")) {
        const auto& roots = j["roots"];
        if (!roots.is_array() || index >= roots.size()) {
            throw InputError("roots: no entry at index " + std::to_string(index));
        }
        if (!roots[index].is_object() || !roots[index].contains("matrix")) {
            throw InputError("roots[" + std::to_string(index) + "].matrix: missing");
        }
        return parse_json_document(roots[index]["matrix"]);
    }
    return parse_json_document(j);
}

MatrixDocument load_matrix_document(const std::string& path, std::size_t index) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot read '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_matrix_document(ss.str(), index);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Eventually nonnegative p-th roots of imprimitive nonnegative matrices"};
    app.require_subcommand(1);
    app.fallthrough();

    Settings s;
    double recon = -1.0;
    double root_tol = -1.0;
    app.add_option("--tol-cluster", s.spectral.cluster, "Relative eigenvalue clustering threshold")
        ->envname("CYCROOTS_TOL_CLUSTER")
        ->capture_default_str();
    app.add_option("--tol-singular", s.spectral.singular, "Singular value ratio treated as singular")
        ->envname("CYCROOTS_TOL_SINGULAR")
        ->capture_default_str();
    app.add_option("--tol-real", s.spectral.real, "Relative imaginary part treated as real")
        ->envname("CYCROOTS_TOL_REAL")
        ->capture_default_str();
    app.add_option("--tol-family", s.spectral.family, "Relative tolerance when grouping rotated eigenvalues")
        ->envname("CYCROOTS_TOL_FAMILY")
        ->capture_default_str();
    app.add_option("--tol-recon", recon, "Reconstruction tolerance (default 1e-8 n ||A||)")
        ->envname("CYCROOTS_TOL_RECON");
    app.add_option("--tol-root", root_tol, "Root residual tolerance (default 1e-8 n max(1, ||A||))")
        ->envname("CYCROOTS_TOL_ROOT");
    app.add_option("--tol-neg", s.verify.neg_tol, "Relative negativity threshold for powers")
        ->envname("CYCROOTS_TOL_NEG")
        ->capture_default_str();
    app.add_option("--tol-zero", s.verify.zero_tol, "Relative threshold for reading digraphs")
        ->envname("CYCROOTS_TOL_ZERO")
        ->capture_default_str();
    app.add_option("--k-max", s.verify.k_max, "Largest power sampled by the verifier")
        ->envname("CYCROOTS_K_MAX")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::string file;
    std::string root_file;
    std::size_t root_index = 0;
    int h = 0;
    int p = 0;
    std::size_t cap = 64;
    bool all = false;
    bool enn = false;

    auto* analyze = app.add_subcommand("analyze", "Structure, Perron-Frobenius checks and cyclic Jordan data");
    analyze->add_option("file", file, "Matrix (CSV or JSON)")->required();

    auto* branches = app.add_subcommand("branches", "Unique branch tuple, exponent set and q");
    branches->set_help_flag("--help", "Print this help message and exit");
    branches->add_option("--h", h, "Cyclic index")->required()->check(CLI::Range(2, 1 << 30));
    branches->add_option("--p", p, "Root degree")->required()->check(CLI::Range(2, 1 << 30));

    auto* roots = app.add_subcommand("roots", "Construct p-th roots");
    roots->add_option("file", file, "Matrix (CSV or JSON)")->required();
    roots->add_option("--p", p, "Root degree")->required()->check(CLI::Range(2, 1 << 30));
    auto* all_flag = roots->add_flag("--all", all, "All primary roots");
    roots->add_flag("--enn", enn, "Eventually nonnegative primary roots (default)")->excludes(all_flag);
    roots->add_option("--cap", cap, "Maximum number of roots emitted")->capture_default_str();

    auto* count = app.add_subcommand("count", "Count primary and eventually nonnegative primary roots");
    count->add_option("file", file, "Matrix (CSV or JSON)")->required();
    count->add_option("--p", p, "Root degree")->required()->check(CLI::Range(2, 1 << 30));

    auto* verify = app.add_subcommand("verify", "Check a candidate root");
    verify->add_option("file", file, "Matrix (CSV or JSON)")->required();
    verify->add_option("--root", root_file, "Candidate root (CSV, JSON document or a roots report)")->required();
    verify->add_option("--index", root_index, "Entry to use when --root is a roots report")->capture_default_str();
    verify->add_option("--p", p, "Root degree")->required()->check(CLI::Range(1, 1 << 30));

    auto* stochastic = app.add_subcommand("stochastic-root", "Principal p-th root of a stochastic matrix");
    stochastic->add_option("file", file, "Matrix (CSV or JSON)")->required();
    stochastic->add_option("--p", p, "Root degree")->required()->check(CLI::Range(2, 1 << 30));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (recon > 0.0) {
        s.spectral.recon = recon;
    }
    if (root_tol > 0.0) {
        s.root_tol = root_tol;
    }

    try {
        json report;
        int code = 0;
        if (analyze->parsed()) {
            report = cmd_analyze(load_matrix_document(file), s);
        } else if (branches->parsed()) {
            report = cmd_branches(h, p);
        } else if (roots->parsed()) {
            report = cmd_roots(load_matrix_document(file), p, all, cap, s);
        } else if (count->parsed()) {
            report = cmd_count(load_matrix_document(file), p, s);
        } else if (verify->parsed()) {
            bool passes = false;
            report = cmd_verify(load_matrix_document(file), load_matrix_document(root_file, root_index), p, s, passes);
            code = passes ? 0 : 1;
        } else if (stochastic->parsed()) {
            report = cmd_stochastic(load_matrix_document(file), p);
        }
        out << report.dump(2) << "\n";
        return code;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace cycroots
