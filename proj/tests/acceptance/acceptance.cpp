// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 10 is benchmark sanity and only warns.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "pathgcn/correlation.hpp"
#include "pathgcn/rmat.hpp"
#include "pathgcn/train.hpp"

using namespace pathgcn;

namespace {

int g_failures = 0;

void report(int index, const char* name, bool pass, const std::string& detail = "") {
    std::printf("[%s] C%d %s%s%s\n", pass ? "PASS" : "FAIL", index, name,
                detail.empty() ? "" : ": ", detail.c_str());
    if (!pass) ++g_failures;
}

CsrGraph rmat_fixture(VertexId n, std::uint64_t m, std::uint64_t seed) {
    RmatParams p;
    p.n = n;
    p.m = m;
    p.a = 0.45;
    p.b = 0.22;
    p.c = 0.22;
    p.d = 0.11;
    p.seed = seed;
    CsrGraph g = build_undirected_csr(gen_rmat(p));
    assign_edge_weights(g, WeightMode::Unit);
    return g;
}

CsrGraph canonical_graph() {
    EdgeList el;
    el.pairs = {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}};
    CsrGraph g = build_undirected_csr(el);
    assign_edge_weights(g, WeightMode::Unit);
    return g;
}

template <typename T>
bool bitwise_equal(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
    return a.same_shape(b) &&
           std::memcmp(a.data.data(), b.data.data(), a.data.size() * sizeof(T)) == 0;
}

double max_rel_diff(const MatrixD& a, const MatrixD& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        const double scale = std::max({1.0, std::abs(a.data[i]), std::abs(b.data[i])});
        worst = std::max(worst, std::abs(a.data[i] - b.data[i]) / scale);
    }
    return worst;
}

struct Instance {
    CsrGraph graph;
    TrainingSet vt;
    std::size_t layers;
};

// 100 instances: n up to 4096, ratios {0.05, 0.1, 0.5}, L in {2, 3}
std::vector<Instance> equivalence_instances() {
    std::vector<Instance> out;
    const VertexId sizes[] = {256, 512, 1024, 2048, 4096};
    const double ratios[] = {0.05, 0.1, 0.5};
    std::uint64_t seed = 0;
    while (out.size() < 100) {
        for (VertexId n : sizes) {
            for (double ratio : ratios) {
                for (std::size_t L : {2u, 3u}) {
                    if (out.size() == 100) break;
                    Instance inst{rmat_fixture(n, n * 4, 1000 + seed),
                                  sample_training_set(n, ratio, seed), L};
                    out.push_back(std::move(inst));
                    ++seed;
                }
            }
        }
    }
    return out;
}

struct ModeRun {
    std::vector<MatrixD> w_grads;
    std::vector<MatrixD> x_grads;  // all-active only
    WorkCounters counters;
};

ModeRun run_mode(const Instance& inst, TrainMode mode, CommitMode commit,
                 bool capture_x = false) {
    const std::size_t L = inst.layers;
    std::vector<std::size_t> dims(L, 16);
    dims.back() = 4;
    const GroupedCsr grouped = group_neighbors(inst.graph.view(), 4);
    const auto params = init_params<double>(16, dims, 7);
    const MatrixD x0 = random_features<double>(inst.graph.n, 16, 7);
    const MatrixD ref = random_reference<double>(inst.graph.n, 4, inst.vt, 7);

    ModeRun run;
    const auto arts = forward(grouped, x0, params, commit, 0, run.counters);
    const MatrixD top = top_grad_from_probs(arts.x[L], ref, inst.vt);

    switch (mode) {
        case TrainMode::AllActive:
            run.w_grads = backward_all_active(grouped, arts, top, params, commit, 0,
                                              run.counters, capture_x ? &run.x_grads : nullptr);
            break;
        case TrainMode::IfElse: {
            const FrontierSets f = compute_frontiers(inst.graph, inst.vt, L);
            run.w_grads =
                backward_ifelse(grouped, f, arts, top, params, commit, 0, run.counters);
            break;
        }
        default: {
            const FrontierSets f = compute_frontiers(inst.graph, inst.vt, L);
            auto paths = prepare_all_paths(inst.graph, f);
            const std::uint64_t stamp = path_fingerprint(inst.graph, inst.vt, L);
            std::vector<GroupedCsr> pgroups;
            for (auto& p : paths) {
                p.fingerprint = stamp;
                pgroups.push_back(group_neighbors(p.view(), 2));
            }
            run.w_grads = backward_epp(paths, pgroups, f, arts, top, params, GatherMode::Local,
                                       commit, 0, run.counters, stamp);
            break;
        }
    }
    return run;
}

// ---- criteria -------------------------------------------------------------

void criterion_1_and_2() {
    const auto start = std::chrono::steady_clock::now();
    const auto instances = equivalence_instances();
    bool det_equal = true, fast_close = true, zero_rows = true;
    std::string detail;

    for (std::size_t i = 0; i < instances.size(); ++i) {
        const Instance& inst = instances[i];
        const ModeRun base = run_mode(inst, TrainMode::AllActive, CommitMode::Deterministic,
                                      /*capture_x=*/true);
        const ModeRun ifelse = run_mode(inst, TrainMode::IfElse, CommitMode::Deterministic);
        const ModeRun epp = run_mode(inst, TrainMode::EppPreprocess, CommitMode::Deterministic);
        for (std::size_t l = 0; l < inst.layers; ++l) {
            if (!bitwise_equal(base.w_grads[l], ifelse.w_grads[l]) ||
                !bitwise_equal(base.w_grads[l], epp.w_grads[l])) {
                det_equal = false;
                detail = "instance " + std::to_string(i) + " layer " + std::to_string(l);
            }
        }
        const ModeRun fast_epp = run_mode(inst, TrainMode::EppPreprocess, CommitMode::Fast);
        const ModeRun fast_if = run_mode(inst, TrainMode::IfElse, CommitMode::Fast);
        const ModeRun fast_all = run_mode(inst, TrainMode::AllActive, CommitMode::Fast);
        for (std::size_t l = 0; l < inst.layers; ++l) {
            if (max_rel_diff(base.w_grads[l], fast_epp.w_grads[l]) >= 1e-6 ||
                max_rel_diff(base.w_grads[l], fast_if.w_grads[l]) >= 1e-6 ||
                max_rel_diff(base.w_grads[l], fast_all.w_grads[l]) >= 1e-6)
                fast_close = false;
        }

        // criterion 2 on the same instances: X^(l)' rows outside N^{L-l}
        const FrontierSets f = compute_frontiers(inst.graph, inst.vt, inst.layers);
        for (std::size_t idx = 0; idx < base.x_grads.size(); ++idx) {
            const std::size_t l = inst.layers - 1 - idx;  // capture order is l = L-1 .. 0
            const auto active = level_bitmap(f, inst.layers - l, inst.graph.n);
            const MatrixD& xg = base.x_grads[idx];
            for (VertexId v = 0; v < inst.graph.n && zero_rows; ++v) {
                if (active[v]) continue;
                for (std::size_t j = 0; j < xg.cols; ++j)
                    if (xg.at(v, j) != 0.0) {
                        zero_rows = false;
                        detail = "nonzero inactive row, instance " + std::to_string(i);
                        break;
                    }
            }
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < 120.0;
    report(1, "gradient equivalence across all-active/ifelse/epp (100 instances)",
           det_equal && fast_close && in_time,
           (det_equal ? "" : "bitwise mismatch " + detail) +
               (fast_close ? "" : " fast-mode tolerance exceeded") +
               (in_time ? " (" + std::to_string(seconds) + "s)" : " over 120s budget"));
    report(2, "zero gradient rows outside the active frontier", zero_rows, detail);
}

void criterion_3() {
    const CsrGraph g = canonical_graph();
    TrainingSet vt;
    vt.vertices = {2, 4};
    vt.ratio = 0.4;
    const FrontierSets f = compute_frontiers(g, vt, 2);
    bool pass = f.levels[1] == std::vector<VertexId>{1, 3};

    const ExecutionPath sg1 = extract_execution_path(g, f, 1);
    const ExecutionPath sg0 = extract_execution_path(g, f, 0);
    auto edges = [](const ExecutionPath& p) {
        std::set<std::pair<VertexId, VertexId>> out;
        for (VertexId d = 0; d < p.dest_count(); ++d)
            for (EdgeIndex e = p.offsets[d]; e < p.offsets[d + 1]; ++e)
                out.insert({p.src_local_to_global[p.neighbors[e]], p.dest_local_to_global[d]});
        return out;
    };
    const std::set<std::pair<VertexId, VertexId>> sg1_expect = {{2, 1}, {4, 1}, {2, 3}, {4, 3}};
    const std::set<std::pair<VertexId, VertexId>> sg0_expect = {{1, 0}, {3, 1}, {1, 2}, {3, 2},
                                                                {1, 3}, {1, 4}, {3, 4}};
    pass = pass && edges(sg1) == sg1_expect && edges(sg0) == sg0_expect;

    const GroupedCsr grouped = group_neighbors(g.view(), 3);
    pass = pass && grouped.group_count() == 6 && grouped.groups_of(1) == 2;
    if (pass) {
        const auto first = grouped.groups[grouped.dest_groups[1]];
        const auto second = grouped.groups[grouped.dest_groups[1] + 1];
        pass = (first.edge_end - first.edge_begin) == 3 &&
               (second.edge_end - second.edge_begin) == 1;
    }
    report(3, "worked-example fixture: N^1, SG_1, SG_0 and the gs=3 split", pass);
}

void criterion_4() {
    const GsModel m = default_gs_model();
    struct Row {
        const char* name;
        VertexId n;
        EdgeIndex e;
        VertexId expect;
    };
    // reference values computed by independent direct evaluation
    const Row rows[] = {{"Cora", 2708, 5278, 2},          {"Citeseer", 3327, 4552, 2},
                        {"Pubmed", 19717, 44324, 2},      {"Twitter", 81306, 1342296, 10},
                        {"Blog", 88784, 2093195, 12},     {"Amazon", 410236, 2439437, 6},
                        {"Google", 875713, 4322051, 9},   {"Youtube", 1134890, 2987624, 15}};
    bool pass = true;
    std::string detail;
    for (const Row& row : rows) {
        GraphStats s;
        s.n_vertices = row.n;
        s.n_undirected_edges = row.e;
        s.avg_degree = static_cast<double>(row.e) / row.n;
        const VertexId got = regression_gs(s, m);
        if (got != row.expect) {
            pass = false;
            detail += std::string(row.name) + " got " + std::to_string(got) + " want " +
                      std::to_string(row.expect) + "; ";
        }
    }
    report(4, "published regression coefficients reproduce every reference gs", pass, detail);
}

MatrixD fixtures_random(std::size_t rows, std::size_t cols) {
    MatrixD m(rows, cols);
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (double& v : m.data) v = u(rng);
    return m;
}

void criterion_5() {
    // 12-vertex instance, end-to-end weight gradients vs central differences
    EdgeList el;
    el.n_hint = 12;
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<VertexId> pick(0, 11);
    for (int i = 0; i < 30; ++i) {
        const VertexId u = pick(rng), v = pick(rng);
        if (u != v) el.pairs.emplace_back(u, v);
    }
    CsrGraph g = build_undirected_csr(el);
    assign_edge_weights(g, WeightMode::Unit);
    TrainingSet vt = sample_training_set(g.n, 0.25, 1);

    const std::size_t L = 2;
    const GroupedCsr grouped = group_neighbors(g.view(), 2);
    auto params = init_params<double>(4, {3, 2}, 3);
    const MatrixD x0 = random_features<double>(g.n, 4, 3);
    const MatrixD ref = random_reference<double>(g.n, 2, vt, 3);
    WorkCounters counters;
    const auto arts = forward(grouped, x0, params, CommitMode::Deterministic, 0, counters);
    const MatrixD top = top_grad_from_probs(arts.x[L], ref, vt);
    const auto grads =
        backward_all_active(grouped, arts, top, params, CommitMode::Deterministic, 0, counters);

    auto loss_at = [&](const ModelParams<double>& p) {
        WorkCounters c;
        return ce_loss(forward(grouped, x0, p, CommitMode::Deterministic, 0, c).x[L], ref, vt);
    };
    const double h = 1e-6;
    bool pass = true;
    double worst = 0.0;
    for (std::size_t l = 0; l < L && pass; ++l)
        for (std::size_t i = 0; i < params.weights[l].data.size(); ++i) {
            ModelParams<double> up = params, dn = params;
            up.weights[l].data[i] += h;
            dn.weights[l].data[i] -= h;
            const double fd = (loss_at(up) - loss_at(dn)) / (2 * h);
            const double an = grads[l].data[i];
            const double rel = std::abs(fd - an) / std::max({std::abs(fd), std::abs(an), 1e-7});
            worst = std::max(worst, rel);
            if (rel >= 1e-4) pass = false;
        }

    // Eq.-2-style output gradient vs finite differences of the loss
    const MatrixD probs = row_softmax(fixtures_random(8, 4));
    MatrixD ref2(8, 4);
    TrainingSet vt2;
    vt2.vertices = {0, 2, 5, 7};
    vt2.ratio = 0.5;
    std::mt19937_64 rng2(11);
    std::uniform_int_distribution<std::size_t> cls(0, 3);
    for (VertexId v : vt2.vertices) ref2.at(v, cls(rng2)) = 1.0;
    const MatrixD lit = output_grad_literal(probs, ref2, vt2);
    for (std::size_t i = 0; i < probs.rows && pass; ++i)
        for (std::size_t j = 0; j < probs.cols; ++j) {
            MatrixD up = probs, dn = probs;
            up.at(i, j) += h;
            dn.at(i, j) -= h;
            const double fd = (ce_loss(up, ref2, vt2) - ce_loss(dn, ref2, vt2)) / (2 * h);
            const double an = lit.at(i, j);
            const double rel = std::abs(fd - an) / std::max({std::abs(fd), std::abs(an), 1e-7});
            worst = std::max(worst, rel);
            if (rel >= 1e-4) pass = false;
        }
    report(5, "finite-difference agreement of weight and output gradients", pass,
           "worst rel " + std::to_string(worst));
}

void criterion_6() {
    const CsrGraph g = rmat_fixture(1024, 8192, 7);
    bool pass = true;
    std::string detail;

    {
        Instance inst{g, sample_training_set(g.n, 0.1, 42), 2};
        const ModeRun epp = run_mode(inst, TrainMode::EppPreprocess, CommitMode::Deterministic);
        const FrontierSets f = compute_frontiers(g, inst.vt, 2);
        std::set<VertexId> vts(inst.vt.vertices.begin(), inst.vt.vertices.end());
        std::uint64_t expect = 0;
        for (VertexId v : f.levels[1])
            for (VertexId u : g.adj(v))
                if (vts.count(u)) ++expect;
        const std::uint64_t got = epp.counters.backward_edges_per_layer[0];
        if (got != expect || got >= g.m()) {
            pass = false;
            detail = "ratio 0.1: got " + std::to_string(got) + " want " + std::to_string(expect);
        }
    }
    {
        Instance inst{g, sample_training_set(g.n, 1.0, 42), 2};
        const ModeRun epp = run_mode(inst, TrainMode::EppPreprocess, CommitMode::Deterministic);
        if (epp.counters.backward_edges_per_layer[0] != g.m()) {
            pass = false;
            detail += " ratio 1.0: expected full m";
        }
    }
    report(6, "epp work reduction matches the frontier formula exactly", pass, detail);
}

void criterion_7() {
    bool pass = true;
    std::string detail;

    // noiseless planted recovery within 1e-9
    const GsModel planted{0.5, 1e-5, -2e-6, 0.6};
    SampleTable t;
    std::mt19937_64 rng(78);
    std::uniform_real_distribution<double> nv(100, 1e6);
    for (int i = 0; i < 10; ++i) {
        SampleRow r{};
        r.n_vertices = std::floor(nv(rng));
        r.n_edges = std::floor(r.n_vertices * 2.5) + 500.0 * i;
        r.dim = 16;
        const VertexId label = 1 + (i % 6);
        r.avg_degree = (static_cast<double>(label) - planted.beta0 -
                        planted.beta1 * r.n_vertices - planted.beta2 * r.n_edges) /
                       planted.beta3;
        r.optimal_gs = label;
        t.rows.push_back(r);
    }
    const GsModel fit = fit_least_squares(t);
    if (std::abs(fit.beta0 - planted.beta0) > 1e-9 ||
        std::abs(fit.beta1 - planted.beta1) > 1e-9 ||
        std::abs(fit.beta2 - planted.beta2) > 1e-9 ||
        std::abs(fit.beta3 - planted.beta3) > 1e-9) {
        pass = false;
        detail += "planted coefficients not recovered; ";
    }

    // perfect linearity and the hand case
    const std::vector<double> x{1, 2, 3, 4, 5};
    std::vector<double> y;
    for (double v : x) y.push_back(2 * v + 1);
    if (std::abs(pearson_r(x, y).r - 1.0) > 1e-12) {
        pass = false;
        detail += "linear r != 1; ";
    }
    const std::vector<double> hx{1, 2, 3}, hy{1, 3, 2};
    if (std::abs(pearson_r(hx, hy).r - 0.5) > 1e-12) {
        pass = false;
        detail += "hand case r != 0.5; ";
    }
    report(7, "least-squares recovery and Pearson reference values", pass, detail);
}

void criterion_8() {
    const CsrGraph g = rmat_fixture(1024, 8192, 7);
    const TrainingSet vt = sample_training_set(g.n, 0.1, 42);
    const FrontierSets f = compute_frontiers(g, vt, 2);
    const auto paths = prepare_all_paths(g, f);
    const auto r = path_footprint_bytes(paths, g, {128, {16, 4}});
    const bool pass = r.ratio >= 1.0 && r.ratio <= 1.20;
    report(8, "memory footprint ratio within the expected expansion band", pass,
           "ratio " + std::to_string(r.ratio));
}

void criterion_9() {
    const CsrGraph g = rmat_fixture(1024, 8192, 7);
    const TrainingSet vt = sample_training_set(g.n, 0.1, 42);
    bool pass = true;
    double prev = 0.0;
    std::string curve;
    for (std::size_t L = 2; L <= 6; ++L) {
        const FrontierSets f = compute_frontiers(g, vt, L);
        const auto paths = prepare_all_paths(g, f);
        if (paths.size() != L) pass = false;
        std::vector<std::size_t> dims(L, 16);
        dims.back() = 4;
        const auto r = path_footprint_bytes(paths, g, {128, dims});
        curve += std::to_string(r.ratio) + " ";
        if (r.ratio + 1e-12 < prev) pass = false;
        prev = r.ratio;
    }
    report(9, "multi-layer preparation succeeds with a non-decreasing footprint", pass, curve);
}

void criterion_10() {
    const CsrGraph g = rmat_fixture(4096, 16384, 13);
    const TrainingSet vt = sample_training_set(g.n, 0.1, 3);
    int epp_wins = 0;
    for (int run = 0; run < 5; ++run) {
        Instance inst{g, vt, 2};
        const ModeRun epp = run_mode(inst, TrainMode::EppPreprocess, CommitMode::Fast);
        const ModeRun ifelse = run_mode(inst, TrainMode::IfElse, CommitMode::Fast);
        if (epp.counters.backward_aggregation.wall_seconds <=
            ifelse.counters.backward_aggregation.wall_seconds)
            ++epp_wins;
    }
    std::printf("[%s] C10 benchmark sanity: epp backward-aggregation beat ifelse in %d/5 runs\n",
                epp_wins >= 4 ? "PASS" : "WARN", epp_wins);
}

}  // namespace

int main() {
    criterion_1_and_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (g_failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return g_failures;
}
