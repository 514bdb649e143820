#include "lbcolor/generators.hpp"

#include <algorithm>
#include <numeric>

namespace lbcolor {

namespace {

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::vector<int> all_colors(int k) {
    std::vector<int> list(k);
    std::iota(list.begin(), list.end(), 0);
    return list;
}

// Appends elements one at a time; colors and parts are 0-based.
struct Builder {
    Instance inst;

    Builder(Mode mode, int k, int p) {
        inst.mode = mode;
        inst.k = k;
        inst.p = p;
        inst.bounds.assign(p, std::vector<Weight>(k, 0));
    }

    int vertex() { return inst.n++; }

    int element(int part, Weight w, std::vector<int> list) {
        inst.part_of.push_back(part);
        inst.weight.push_back(w);
        inst.allowed.push_back(std::move(list));
        return static_cast<int>(inst.part_of.size()) - 1;
    }

    int edge(int u, int v) {
        inst.edges.emplace_back(u, v);
        return static_cast<int>(inst.edges.size()) - 1;
    }

    Instance finish() {
        validate_instance(inst);
        return std::move(inst);
    }
};

// Occurrence number (0-based) of each clause literal, counted over the clauses in order.
std::vector<std::array<int, 3>> occurrence_index(const OneInThreeSatSource& src) {
    std::vector<int> seen(src.variables, 0);
    std::vector<std::array<int, 3>> out;
    for (const auto& clause : src.clauses) {
        auto& row = out.emplace_back();
        for (int l = 0; l < 3; ++l) row[l] = seen[clause[l]]++;
    }
    return out;
}

}  // namespace

std::vector<int> OneInThreeSatSource::occurrences() const {
    std::vector<int> occ(variables, 0);
    for (const auto& clause : clauses)
        for (int x : clause) ++occ[x];
    return occ;
}

void validate_source(const PartitionSource& src) {
    if (src.a.empty()) throw InstanceError("a", "needs at least one integer");
    Weight sum = 0;
    for (std::size_t i = 0; i < src.a.size(); ++i) {
        if (src.a[i] <= 0) throw InstanceError(at("a", i), "must be positive");
        sum += src.a[i];
    }
    if (src.B <= 0 || sum != 2 * src.B) throw InstanceError("B", "sum of a must equal 2B");
}

void validate_source(const ThreePartitionSource& src) {
    if (src.a.empty() || src.a.size() % 3 != 0) throw InstanceError("a", "needs 3n integers with n >= 1");
    Weight sum = 0;
    for (std::size_t i = 0; i < src.a.size(); ++i) {
        if (!(4 * src.a[i] > src.B && 2 * src.a[i] < src.B)) throw InstanceError(at("a", i), "must lie strictly between B/4 and B/2");
        sum += src.a[i];
    }
    if (sum != static_cast<Weight>(src.groups()) * src.B) throw InstanceError("B", "sum of a must equal nB");
}

void validate_source(const OneInThreeSatSource& src) {
    if (src.variables < 1) throw InstanceError("variables", "must be positive");
    if (src.clauses.empty()) throw InstanceError("clauses", "needs at least one clause");
    for (std::size_t h = 0; h < src.clauses.size(); ++h) {
        const auto& c = src.clauses[h];
        for (int l = 0; l < 3; ++l)
            if (c[l] < 0 || c[l] >= src.variables) throw InstanceError(at(at("clauses", h), l), "variable out of range");
        if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) throw InstanceError(at("clauses", h), "variables must be distinct");
    }
}

void validate_source(const ThreeDimMatchingSource& src) {
    if (src.q < 1) throw InstanceError("q", "must be positive");
    for (std::size_t h = 0; h < src.triples.size(); ++h)
        for (int l = 0; l < 3; ++l)
            if (src.triples[h][l] < 0 || src.triples[h][l] >= src.q)
                throw InstanceError(at(at("triples", h), l), "element out of range");
}

void validate_source(const SourceProblem& src) {
    std::visit([](const auto& s) { validate_source(s); }, src);
}

Instance gen_from_partition(const PartitionSource& src, PartitionVariant variant) {
    validate_source(src);
    const Mode mode = variant == PartitionVariant::vertex ? Mode::vertex : Mode::edge;
    Builder b(mode, 2, 1);
    b.inst.bounds[0] = {src.B, src.B};
    for (Weight a : src.a) {
        if (mode == Mode::vertex) {
            b.vertex();
        } else {
            const int u = b.vertex();
            b.edge(u, b.vertex());
        }
        b.element(0, a, {0, 1});
    }
    return b.finish();
}

Instance gen_from_three_partition(const ThreePartitionSource& src, ThreePartitionVariant variant) {
    validate_source(src);
    const int n = src.groups();
    if (variant == ThreePartitionVariant::isolated) {
        Builder b(Mode::vertex, n, 1);
        b.inst.bounds[0].assign(n, src.B);
        for (Weight a : src.a) {
            b.vertex();
            b.element(0, a, all_colors(n));
        }
        return b.finish();
    }

    if (n < 2) throw UsageError("star_forest needs n >= 2");
    // In 1-based colors: j in 1..n, n+i, and ni+3n+h for h in 1..n.
    const int k = 3 * n * n + 4 * n;
    auto color_j = [](int j) { return j - 1; };
    auto color_item = [n](int i) { return n + i - 1; };
    auto color_slot = [n](int i, int h) { return n * i + 3 * n + h - 1; };
    auto slots = [&](int i) {
        std::vector<int> list;
        for (int h = 1; h <= n; ++h) list.push_back(color_slot(i, h));
        return list;
    };

    Builder b(Mode::vertex, k, 1);
    auto& W = b.inst.bounds[0];
    for (int j = 1; j <= n; ++j) W[color_j(j)] = 3 * static_cast<Weight>(n) * src.B;
    for (int i = 1; i <= 3 * n; ++i) {
        W[color_item(i)] = 3 * static_cast<Weight>(n) * src.a[i - 1] * (n - 1) + 1;
        for (int h = 1; h <= n; ++h) W[color_slot(i, h)] = 1;
    }
    for (int i = 1; i <= 3 * n; ++i)
        for (int j = 1; j <= n; ++j) {
            const int center = b.vertex();
            std::vector<int> center_list{color_item(i)};
            for (int c : slots(i)) center_list.push_back(c);
            b.element(0, 1, center_list);
            std::vector<int> leaf_list{color_j(j), color_item(i)};
            std::sort(leaf_list.begin(), leaf_list.end());
            for (Weight l = 0; l < 3 * n * src.a[i - 1]; ++l) {
                const int leaf = b.vertex();
                b.edge(center, leaf);
                b.element(0, 1, leaf_list);
            }
        }
    for (int i = 1; i <= 3 * n; ++i) {
        b.vertex();
        b.element(0, 1, slots(i));
    }
    return b.finish();
}

Instance gen_from_one_in_three_sat(const OneInThreeSatSource& src, SatVariant variant) {
    validate_source(src);
    const int nu = src.variables;
    const int mu = static_cast<int>(src.clauses.size());
    const auto occ = src.occurrences();
    const auto occ_index = occurrence_index(src);

    if (variant == SatVariant::star_forest) {
        // Part i < nu holds {v_i, u_i^0}; part nu + h holds the clause leaves.
        Builder b(Mode::vertex, 2, nu + mu);
        std::vector<std::vector<int>> leaf(nu);
        for (int i = 0; i < nu; ++i) {
            const int center = b.vertex();
            b.element(i, 1, {0, 1});
            for (int j = 0; j <= occ[i]; ++j) {
                const int u = b.vertex();
                b.edge(center, u);
                leaf[i].push_back(u);
                b.element(0, 1, {0, 1});  // part fixed below
            }
            b.inst.part_of[leaf[i][0]] = i;
            b.inst.bounds[i] = {1, 1};
        }
        for (int h = 0; h < mu; ++h) {
            for (int l = 0; l < 3; ++l) b.inst.part_of[leaf[src.clauses[h][l]][occ_index[h][l] + 1]] = nu + h;
            b.inst.bounds[nu + h] = {1, 2};
        }
        return b.finish();
    }

    if (variant == SatVariant::complete_bipartite) {
        const int k = 2 * nu + 1;
        Builder b(Mode::vertex, k, 1);
        std::vector<int> left, right;
        for (int h = 0; h < mu; ++h) {
            left.push_back(b.vertex());
            std::vector<int> list;
            for (int x : src.clauses[h]) list.push_back(nu + x);
            std::sort(list.begin(), list.end());
            b.element(0, 1, list);
        }
        for (int i = 0; i < nu; ++i)
            for (int j = 0; j < occ[i]; ++j) {
                left.push_back(b.vertex());
                b.element(0, 1, {i, 2 * nu});
            }
        for (int i = 0; i < nu; ++i)
            for (int j = 0; j < occ[i]; ++j) {
                right.push_back(b.vertex());
                b.element(0, 1, {i, nu + i});
            }
        for (int u : left)
            for (int v : right) b.edge(u, v);
        for (int i = 0; i < nu; ++i) b.inst.bounds[0][i] = b.inst.bounds[0][nu + i] = occ[i];
        b.inst.bounds[0][2 * nu] = mu;
        return b.finish();
    }

    // cycles_edges. Per occurrence (i, j): a C4 q0 q1 q2 q3 with a = q0q1,
    // b = q1q2, c = q2q3, d = q3q0, then a single edge e.
    int total = 0;
    for (int o : occ) total += o;
    Builder b(Mode::edge, 2, 2 * total + mu);
    std::vector<int> first(nu, 0);  // 2 * sum_{q<i} occ(q)
    for (int i = 1; i < nu; ++i) first[i] = first[i - 1] + 2 * occ[i - 1];
    struct Cycle {
        int a, b, c, d, e;
    };
    std::vector<std::vector<Cycle>> cyc(nu);
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < occ[i]; ++j) {
            int q[4];
            for (int& x : q) x = b.vertex();
            Cycle cy{};
            cy.a = b.edge(q[0], q[1]);
            cy.b = b.edge(q[1], q[2]);
            cy.c = b.edge(q[2], q[3]);
            cy.d = b.edge(q[3], q[0]);
            const int r = b.vertex();
            cy.e = b.edge(r, b.vertex());
            for (int x = 0; x < 5; ++x) b.element(0, 1, {0, 1});
            cyc[i].push_back(cy);
        }
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < occ[i]; ++j) {
            const int h = first[i] + j;
            const int h2 = first[i] + occ[i] + j;
            b.inst.part_of[cyc[i][j].b] = h;
            b.inst.part_of[cyc[i][(j + 1) % occ[i]].c] = h;
            b.inst.part_of[cyc[i][j].d] = h2;
            b.inst.part_of[cyc[i][j].e] = h2;
            b.inst.bounds[h] = {1, 1};
            b.inst.bounds[h2] = {1, 1};
        }
    for (int l = 0; l < mu; ++l) {
        const int h = 2 * total + l;
        for (int t = 0; t < 3; ++t) b.inst.part_of[cyc[src.clauses[l][t]][occ_index[l][t]].a] = h;
        b.inst.bounds[h] = {1, 2};
    }
    return b.finish();
}

Instance gen_from_three_dim_matching(const ThreeDimMatchingSource& src) {
    validate_source(src);
    const int q = src.q;
    const int t = static_cast<int>(src.triples.size());
    if (t < q) throw UsageError("three_dim_matching needs at least q triples");
    Builder b(Mode::vertex, t, 1);
    for (int c = 0; c < t; ++c) b.inst.bounds[0][c] = c < q ? 4 : 1;
    for (int v = 0; v < t + 3 * q; ++v) {
        b.vertex();
        b.element(0, 1, all_colors(t));
    }
    // x_i = t + i, y_j = t + q + j, z_l = t + 2q + l.
    for (int h = 0; h < t; ++h) {
        for (int g = h + 1; g < t; ++g) b.edge(h, g);
        const auto& tr = src.triples[h];
        for (int d = 0; d < 3; ++d)
            for (int e = 0; e < q; ++e)
                if (e != tr[d]) b.edge(h, t + d * q + e);
    }
    return b.finish();
}

SourceProblem source_from_json(const Json& doc) {
    if (!doc.is_object()) throw InstanceError("document", "expected a JSON object");
    auto get = [&](const char* key) -> const Json& {
        if (!doc.contains(key)) throw InstanceError(key, "missing field");
        return doc[key];
    };
    auto integer = [](const Json& v, const std::string& path) -> std::int64_t {
        if (!v.is_number_integer()) throw InstanceError(path, "expected an integer");
        return v.get<std::int64_t>();
    };
    auto integers = [&](const char* key) {
        const Json& v = get(key);
        if (!v.is_array()) throw InstanceError(key, "expected an array");
        std::vector<std::int64_t> out;
        for (std::size_t i = 0; i < v.size(); ++i) out.push_back(integer(v[i], at(key, i)));
        return out;
    };
    auto triples = [&](const char* key) {
        const Json& v = get(key);
        if (!v.is_array()) throw InstanceError(key, "expected an array");
        std::vector<std::array<int, 3>> out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_array() || v[i].size() != 3) throw InstanceError(at(key, i), "expected three entries");
            auto& row = out.emplace_back();
            for (int l = 0; l < 3; ++l) row[l] = static_cast<int>(integer(v[i][l], at(at(key, i), l))) - 1;
        }
        return out;
    };

    const Json& type = get("type");
    SourceProblem src;
    if (type == "partition") {
        src = PartitionSource{integers("a"), integer(get("B"), "B")};
    } else if (type == "three_partition") {
        src = ThreePartitionSource{integers("a"), integer(get("B"), "B")};
    } else if (type == "one_in_three_sat") {
        src = OneInThreeSatSource{static_cast<int>(integer(get("variables"), "variables")), triples("clauses")};
    } else if (type == "three_dim_matching") {
        src = ThreeDimMatchingSource{static_cast<int>(integer(get("q"), "q")), triples("triples")};
    } else {
        throw InstanceError("type", "unknown source type " + type.dump());
    }
    validate_source(src);
    return src;
}

Json source_to_json(const SourceProblem& src) {
    Json doc;
    auto plus_one = [](const std::vector<std::array<int, 3>>& rows) {
        Json out = Json::array();
        for (const auto& r : rows) out.push_back({r[0] + 1, r[1] + 1, r[2] + 1});
        return out;
    };
    if (const auto* s = std::get_if<PartitionSource>(&src)) {
        doc["type"] = "partition";
        doc["a"] = s->a;
        doc["B"] = s->B;
    } else if (const auto* s = std::get_if<ThreePartitionSource>(&src)) {
        doc["type"] = "three_partition";
        doc["a"] = s->a;
        doc["B"] = s->B;
    } else if (const auto* s = std::get_if<OneInThreeSatSource>(&src)) {
        doc["type"] = "one_in_three_sat";
        doc["variables"] = s->variables;
        doc["clauses"] = plus_one(s->clauses);
    } else {
        const auto& m = std::get<ThreeDimMatchingSource>(src);
        doc["type"] = "three_dim_matching";
        doc["q"] = m.q;
        doc["triples"] = plus_one(m.triples);
    }
    return doc;
}

std::vector<std::string> variant_names(const SourceProblem& src) {
    switch (src.index()) {
        case 0: return {"vertex", "edge"};
        case 1: return {"isolated", "star_forest"};
        case 2: return {"star_forest", "complete_bipartite", "cycles_edges"};
        default: return {"split"};
    }
}

Generated generate(const SourceProblem& src, const std::string& variant, std::optional<bool> expected) {
    const auto names = variant_names(src);
    const std::string name = variant.empty() ? names.front() : variant;
    const auto pos = std::find(names.begin(), names.end(), name);
    if (pos == names.end()) {
        std::string list;
        for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
        throw UsageError("unknown variant '" + name + "' (expected one of: " + list + ")");
    }
    const int v = static_cast<int>(pos - names.begin());

    Generated g;
    if (const auto* s = std::get_if<PartitionSource>(&src))
        g.instance = gen_from_partition(*s, static_cast<PartitionVariant>(v));
    else if (const auto* s = std::get_if<ThreePartitionSource>(&src))
        g.instance = gen_from_three_partition(*s, static_cast<ThreePartitionVariant>(v));
    else if (const auto* s = std::get_if<OneInThreeSatSource>(&src))
        g.instance = gen_from_one_in_three_sat(*s, static_cast<SatVariant>(v));
    else
        g.instance = gen_from_three_dim_matching(std::get<ThreeDimMatchingSource>(src));

    g.metadata["source"] = source_to_json(src);
    g.metadata["variant"] = name;
    g.metadata["expected"] = expected ? Json(*expected ? "feasible" : "infeasible") : Json(nullptr);
    return g;
}

Json generated_to_json(const Generated& g) {
    Json doc = instance_to_json(g.instance);
    doc["metadata"] = g.metadata;
    return doc;
}

}  // namespace lbcolor
