#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "equilayer/basis.hpp"
#include "equilayer/combinatorics.hpp"
#include "equilayer/errors.hpp"
#include "equilayer/oracle.hpp"
#include "equilayer/orbits.hpp"
#include "equilayer/serialize.hpp"

namespace {

using namespace equilayer;

constexpr int kExitOk = 0;
constexpr int kExitInvalidArguments = 2;
constexpr int kExitResourceBound = 3;
constexpr int kExitVerificationFailure = 4;

struct CommonOptions {
    int n = 1;
    int k = 0;
    int l = 0;
    std::string group = "sn";
    int d_k = 1;
    int d_l = 1;
    std::string format = "json";
    bool as_float = false;
    std::int64_t max_size = 0;  // 0: keep the default / env override
};

SizeGuard make_guard(const CommonOptions& options) {
    SizeGuard guard = SizeGuard::defaults();
    if (options.max_size > 0) guard.max_cells = options.max_size;
    return guard;
}

void add_layer_flags(CLI::App* cmd, CommonOptions& options, bool with_features = true) {
    cmd->add_option("--n", options.n, "size of the ground set [n]")->required();
    cmd->add_option("--k", options.k, "input tensor order");
    cmd->add_option("--l", options.l, "output tensor order");
    cmd->add_option("--group", options.group, "symmetry group: sn or an")->required();
    if (with_features) {
        cmd->add_option("--dk", options.d_k, "input feature channels");
        cmd->add_option("--dl", options.d_l, "output feature channels");
    }
    cmd->add_option("--max-size", options.max_size, "override the cell-count bound");
}

// Pseudo-random but platform-stable rationals: std distributions are not
// portable, a hand-rolled xorshift is.
std::vector<Rat> seeded_params(std::uint64_t seed, std::size_t count) {
    std::uint64_t state = seed * 2654435769ULL + 1;
    std::vector<Rat> params;
    params.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        const std::uint64_t word = state * 2685821657736338717ULL;
        const long num = static_cast<long>(word % 19) - 9;
        const long den = static_cast<long>((word >> 32) % 9) + 1;
        params.push_back(make_rat(num, den));
    }
    return params;
}

std::vector<Rat> parse_params(const std::string& params_arg) {
    std::string text = params_arg;
    if (std::ifstream file(params_arg); file.good()) {
        std::ostringstream content;
        content << file.rdbuf();
        text = content.str();
    }
    for (char& c : text) {
        if (c == ',') c = ' ';
    }
    std::istringstream stream(text);
    std::vector<Rat> params;
    std::string token;
    while (stream >> token) params.push_back(parse_rat(token));
    return params;
}

LayerBasis build_basis(const CommonOptions& options, const SizeGuard& guard) {
    LayerBasis basis =
        layer_basis(options.n, options.k, options.l, group_from_string(options.group), guard);
    if (options.d_k != 1 || options.d_l != 1) {
        basis = with_features(basis, options.d_k, options.d_l, guard);
    }
    return basis;
}

void print_element(const LayerBasis& basis, std::size_t index, const std::string& format,
                   bool as_float, const SizeGuard& guard) {
    const BasisElement& element = basis.elements[index];
    if (format == "json") {
        const auto doc = document_from_element(basis, index);
        std::cout << (as_float ? to_json_float(doc) : to_json(doc)) << "\n";
        return;
    }
    std::cout << "# element " << index;
    for (const auto& provenance : element.provenance) {
        std::cout << " " << provenance.partition.to_string() << ":"
                  << to_string(provenance.sign_class);
    }
    if (basis.d_k > 1 || basis.d_l > 1) {
        std::cout << " feature=(" << element.feature_row << "," << element.feature_col << ")";
    }
    std::cout << "\n";
    if (format == "coo") {
        std::cout << to_coo_text(element.matrix, as_float);
    } else {
        guard.check_cells(element.matrix.rows() * element.matrix.cols(), "dense output");
        std::cout << to_dense_text(element.matrix, as_float);
    }
}

int run_dim(const CommonOptions& options) {
    const GroupKind group = group_from_string(options.group);
    const int m = options.l + options.k;
    std::cout << "partitions of [" << m << "] with at most " << options.n
              << " blocks, by block count:\n";
    Int total = 0;
    const int t_low = m == 0 ? 0 : 1;
    for (int t = t_low; t <= std::min(options.n, std::max(m, t_low)); ++t) {
        const Int count = stirling2(m, t);
        if (count == 0 && t > 0) continue;
        const bool doubled = group == GroupKind::alternating && options.n >= 2 &&
                             (t == options.n - 1 || t == options.n);
        const Int contribution = doubled ? Int(2 * count) : count;
        total += contribution;
        std::cout << "  t=" << t << ": " << count.get_str() << " partition(s)"
                  << (doubled ? " -> split, x2 = " : " -> x1 = ") << contribution.get_str()
                  << "\n";
    }
    const Int expected = group == GroupKind::alternating
                             ? an_dim(options.n, options.k, options.l)
                             : sn_dim(options.n, options.k, options.l);
    if (total != expected) throw std::logic_error("dimension breakdown disagrees with formula");
    std::cout << "dim = " << total.get_str() << "\n";
    return kExitOk;
}

int run_partitions(int m, int max_blocks, int n_for_splits) {
    if (m < 0 || max_blocks < 0) throw std::invalid_argument("m and max-blocks must be >= 0");
    const int n = n_for_splits > 0 ? n_for_splits : max_blocks;
    for (const auto& partition : enumerate_partitions(m, max_blocks)) {
        std::string sketch;
        for (int position = 1; position <= partition.m(); ++position) {
            if (position > 1) sketch += " ";
            sketch += "*" + std::to_string(partition.label_of(position));
        }
        const bool does_split = partition.num_blocks() <= n && splits(partition, n);
        std::cout << partition.to_string() << "  rgs=" << partition.rgs_string()
                  << "  blocks=" << partition.num_blocks() << "  [" << sketch << "]"
                  << "  splits(n=" << n << ")=" << (does_split ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int run_basis(const CommonOptions& options) {
    const SizeGuard guard = make_guard(options);
    const LayerBasis basis = build_basis(options, guard);
    for (std::size_t i = 0; i < basis.elements.size(); ++i) {
        print_element(basis, i, options.format, options.as_float, guard);
    }
    return kExitOk;
}

int run_weight(const CommonOptions& options, const std::string& params_arg, std::int64_t seed,
               bool has_seed, bool verify) {
    const SizeGuard guard = make_guard(options);
    const LayerBasis basis = build_basis(options, guard);

    std::vector<Rat> params;
    if (!params_arg.empty() && has_seed) {
        throw std::invalid_argument("--params and --seed are mutually exclusive");
    } else if (!params_arg.empty()) {
        params = parse_params(params_arg);
        if (params.size() != basis.elements.size()) {
            throw std::invalid_argument("expected " + std::to_string(basis.elements.size()) +
                                        " parameters, got " + std::to_string(params.size()));
        }
    } else if (has_seed) {
        params = seeded_params(static_cast<std::uint64_t>(seed), basis.elements.size());
    } else {
        throw std::invalid_argument("provide --params or --seed");
    }

    const SparseMatrix weight = weight_matrix(basis, params);
    if (verify) {
        const auto result = verify_equivariance(weight, options.n, options.k, options.l,
                                                group_from_string(options.group), options.d_k,
                                                options.d_l, guard);
        if (!result.ok) {
            std::cerr << "verification failed: " << result.detail << "\n";
            return kExitVerificationFailure;
        }
    }
    if (options.format == "json") {
        const auto doc = document_from_weight(basis, params, weight);
        std::cout << (options.as_float ? to_json_float(doc) : to_json(doc)) << "\n";
    } else if (options.format == "coo") {
        std::cout << to_coo_text(weight, options.as_float);
    } else {
        guard.check_cells(weight.rows() * weight.cols(), "dense output");
        std::cout << to_dense_text(weight, options.as_float);
    }
    return kExitOk;
}

int run_verify(const std::string& input, std::int64_t max_size) {
    SizeGuard guard = SizeGuard::defaults();
    if (max_size > 0) guard.max_cells = max_size;
    std::string text;
    if (input == "-") {
        std::ostringstream content;
        content << std::cin.rdbuf();
        text = content.str();
    } else {
        std::ifstream file(input);
        if (!file.good()) throw std::invalid_argument("cannot read '" + input + "'");
        std::ostringstream content;
        content << file.rdbuf();
        text = content.str();
    }
    const MatrixDocument doc = document_from_json(text);
    const SparseMatrix matrix = matrix_from_document(doc);
    VerifyResult result;
    if (doc.factors.size() == 1) {
        const FactorSpec& factor = doc.factors[0];
        result = verify_equivariance(matrix, factor.n, factor.k, factor.l, factor.group, doc.d_k,
                                     doc.d_l, guard);
    } else {
        result = verify_local_equivariance(matrix, doc.factors, guard);
    }
    if (!result.ok) {
        std::cout << "violated: " << result.detail << "\n";
        return kExitVerificationFailure;
    }
    std::cout << "equivariant: every group element commutes\n";
    return kExitOk;
}

int run_oracle(const CommonOptions& options) {
    const SizeGuard guard = make_guard(options);
    const LayerBasis basis = build_basis(options, guard);
    const SubspaceReport report = check_basis(basis, guard);
    std::cout << "elements:   " << basis.elements.size() << "\n";
    std::cout << "dimension:  " << report.dimension.get_str() << " (brute force)\n";
    std::cout << "basis_ok:   " << (report.basis_ok ? "yes" : "no") << "\n";
    std::cout << "span_ok:    " << (report.span_ok ? "yes" : "no") << "\n";
    for (const auto& failure : report.failures) {
        std::cout << "failure: element " << failure.element_index;
        if (!failure.group_element.empty()) std::cout << " at " << failure.group_element;
        std::cout << ": " << failure.detail << "\n";
    }
    std::cout << to_json(report) << "\n";
    return report.ok() ? kExitOk : kExitVerificationFailure;
}

int run_local(const std::vector<std::string>& factor_args, const std::string& format,
              bool as_float, std::int64_t max_size) {
    SizeGuard guard = SizeGuard::defaults();
    if (max_size > 0) guard.max_cells = max_size;
    std::vector<FactorSpec> factors;
    for (const auto& arg : factor_args) {
        std::string text = arg;
        for (char& c : text) {
            if (c == ',') c = ' ';
        }
        std::istringstream stream(text);
        FactorSpec factor;
        std::string group;
        if (!(stream >> factor.n >> factor.k >> factor.l >> group)) {
            throw std::invalid_argument("factor '" + arg + "' is not n,k,l,group");
        }
        factor.group = group_from_string(group);
        factors.push_back(factor);
    }
    const LayerBasis basis = local_basis(factors, guard);
    for (std::size_t i = 0; i < basis.elements.size(); ++i) {
        print_element(basis, i, format, as_float, guard);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact equivariant-layer bases for symmetric and alternating groups"};
    app.require_subcommand(1);

    CommonOptions dim_options;
    auto* dim_cmd = app.add_subcommand("dim", "dimension of the equivariant space, with census");
    add_layer_flags(dim_cmd, dim_options, /*with_features=*/false);

    int partitions_m = 0;
    int partitions_max_blocks = 0;
    int partitions_n = 0;
    auto* partitions_cmd =
        app.add_subcommand("partitions", "list set partitions with bounded block count");
    partitions_cmd->add_option("--m", partitions_m, "ground-set size")->required();
    partitions_cmd->add_option("--max-blocks", partitions_max_blocks, "block-count bound")
        ->required();
    partitions_cmd->add_option("--n", partitions_n, "n for the splits flag (default max-blocks)");

    CommonOptions basis_options;
    auto* basis_cmd = app.add_subcommand("basis", "stream the basis elements in canonical order");
    add_layer_flags(basis_cmd, basis_options);
    basis_cmd->add_option("--format", basis_options.format, "json, coo or dense")
        ->check(CLI::IsMember({"json", "coo", "dense"}));
    basis_cmd->add_flag("--float", basis_options.as_float,
                        "render values as floats (export only)");

    CommonOptions weight_options;
    std::string weight_params;
    std::int64_t weight_seed = 0;
    bool weight_verify = false;
    auto* weight_cmd = app.add_subcommand("weight", "assemble a weight matrix from parameters");
    add_layer_flags(weight_cmd, weight_options);
    weight_cmd->add_option("--format", weight_options.format, "json, coo or dense")
        ->check(CLI::IsMember({"json", "coo", "dense"}));
    weight_cmd->add_flag("--float", weight_options.as_float,
                         "render values as floats (export only)");
    weight_cmd->add_option("--params", weight_params,
                           "parameter file or inline list (canonical element order)");
    auto* seed_option =
        weight_cmd->add_option("--seed", weight_seed, "reproducible pseudo-random parameters");
    weight_cmd->add_flag("--verify", weight_verify, "verify the result commutes before printing");

    std::string verify_input = "-";
    std::int64_t verify_max_size = 0;
    auto* verify_cmd = app.add_subcommand("verify", "check a serialized matrix document");
    verify_cmd->add_option("--input", verify_input, "document path, or - for stdin");
    verify_cmd->add_option("--max-size", verify_max_size, "override the cell-count bound");

    CommonOptions oracle_options;
    auto* oracle_cmd =
        app.add_subcommand("oracle", "brute-force cross-check of the constructed basis");
    add_layer_flags(oracle_cmd, oracle_options);

    std::vector<std::string> local_factors;
    std::string local_format = "json";
    bool local_float = false;
    std::int64_t local_max_size = 0;
    auto* local_cmd = app.add_subcommand("local", "basis for a direct product of groups");
    local_cmd->add_option("--factor", local_factors, "factor as n,k,l,group (repeatable)")
        ->required();
    local_cmd->add_option("--format", local_format, "json, coo or dense")
        ->check(CLI::IsMember({"json", "coo", "dense"}));
    local_cmd->add_flag("--float", local_float, "render values as floats (export only)");
    local_cmd->add_option("--max-size", local_max_size, "override the cell-count bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidArguments;
    }

    try {
        if (dim_cmd->parsed()) return run_dim(dim_options);
        if (partitions_cmd->parsed()) {
            return run_partitions(partitions_m, partitions_max_blocks, partitions_n);
        }
        if (basis_cmd->parsed()) return run_basis(basis_options);
        if (weight_cmd->parsed()) {
            return run_weight(weight_options, weight_params, weight_seed,
                              seed_option->count() > 0, weight_verify);
        }
        if (verify_cmd->parsed()) return run_verify(verify_input, verify_max_size);
        if (oracle_cmd->parsed()) return run_oracle(oracle_options);
        if (local_cmd->parsed()) {
            return run_local(local_factors, local_format, local_float, local_max_size);
        }
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource bound: " << e.what() << "\n";
        return kExitResourceBound;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitInvalidArguments;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
