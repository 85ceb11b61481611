#include "freefactor/algebra.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace freefactor {

StateAlgebra StateAlgebra::matrix_blocks(std::vector<MatrixBlock> blocks, std::string label) {
    StateAlgebra a;
    a.kind = Kind::MatrixBlocks;
    a.blocks = std::move(blocks);
    a.label = std::move(label);
    return a;
}

StateAlgebra StateAlgebra::diffuse_abelian(std::string label) {
    StateAlgebra a;
    a.kind = Kind::DiffuseAbelian;
    a.label = std::move(label);
    return a;
}

StateAlgebra StateAlgebra::commutative(std::vector<Rational> weights, std::string label) {
    std::vector<MatrixBlock> blocks;
    blocks.reserve(weights.size());
    for (auto& w : weights) blocks.push_back(MatrixBlock{1, {w}});
    return matrix_blocks(std::move(blocks), std::move(label));
}

StateAlgebra StateAlgebra::single_block(std::vector<Rational> weights, std::string label) {
    MatrixBlock b;
    b.size = static_cast<int>(weights.size());
    b.weights = std::move(weights);
    return matrix_blocks({std::move(b)}, std::move(label));
}

void validate(const StateAlgebra& a) {
    if (a.is_diffuse()) return;
    if (a.blocks.empty()) throw ValidationError("EmptyAlgebra: no matrix blocks");
    Rational sum(0);
    for (const auto& b : a.blocks) {
        if (b.size < 1 || static_cast<int>(b.weights.size()) != b.size)
            throw ValidationError("EmptyAlgebra: block size/weight mismatch");
        for (const auto& w : b.weights) {
            if (w <= 0) throw ValidationError("NonPositiveWeight: state must be faithful");
            sum += w;
        }
    }
    if (sum != 1) throw ValidationError("WeightSumNotOne: weights sum to " + to_string(sum));
}

std::optional<long> linear_dimension(const StateAlgebra& a) {
    if (a.is_diffuse()) return std::nullopt;
    long d = 0;
    for (const auto& b : a.blocks) d += static_cast<long>(b.size) * b.size;
    return d;
}

std::optional<Rational> max_minimal_projection_weight(const StateAlgebra& a) {
    if (a.is_diffuse()) return std::nullopt;
    Rational best(0);
    for (const auto& b : a.blocks)
        for (const auto& w : b.weights)
            if (w > best) best = w;
    return best;
}

StateAlgebra make_psi_lambda(const Rational& lambda) {
    if (lambda <= 0 || lambda >= 1) throw ParameterOutOfRange("psi_lambda requires lambda in (0,1)");
    Rational d = 1 + lambda;
    return StateAlgebra::single_block({Rational(1) / d, lambda / d}, "psi_" + to_string(lambda));
}

StateAlgebra make_phi_lambda(const Rational& lambda) {
    if (lambda < Rational(1, 2) || lambda >= 1)
        throw ParameterOutOfRange("phi_lambda requires lambda in [1/2,1)");
    return StateAlgebra::single_block({lambda, 1 - lambda}, "phi_" + to_string(lambda));
}

StateAlgebra make_uniform(int n) {
    if (n < 1) throw ParameterOutOfRange("uniform requires n >= 1");
    std::vector<Rational> w(n, Rational(1, n));
    return StateAlgebra::commutative(std::move(w), "C^" + std::to_string(n));
}

StateAlgebra make_trace(int n) {
    if (n < 1) throw ParameterOutOfRange("trace requires n >= 1");
    std::vector<Rational> w(n, Rational(1, n));
    return StateAlgebra::single_block(std::move(w), "M_" + std::to_string(n) + " trace");
}

std::vector<StateAlgebra> parse_algebras_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("algebras") || !j["algebras"].is_array())
        throw ParseError("expected top-level object with \"algebras\" array");
    if (j["algebras"].empty()) throw ParseError("\"algebras\" must not be empty");
    std::vector<StateAlgebra> out;
    try {
        for (const auto& ja : j["algebras"]) {
            if (!ja.is_object() || !ja.contains("kind"))
                throw ParseError("algebra entry needs a \"kind\"");
            std::string kind = ja["kind"].get<std::string>();
            std::string label = ja.value("label", "");
            if (kind == "diffuse_abelian") {
                out.push_back(StateAlgebra::diffuse_abelian(label));
            } else if (kind == "matrix_blocks") {
                if (!ja.contains("blocks") || !ja["blocks"].is_array())
                    throw ParseError("matrix_blocks entry needs \"blocks\"");
                std::vector<MatrixBlock> blocks;
                for (const auto& jb : ja["blocks"]) {
                    MatrixBlock b;
                    b.size = jb.at("size").get<int>();
                    for (const auto& jw : jb.at("weights"))
                        b.weights.push_back(parse_rational(jw.get<std::string>()));
                    blocks.push_back(std::move(b));
                }
                out.push_back(StateAlgebra::matrix_blocks(std::move(blocks), label));
            } else {
                throw ParseError("unknown algebra kind \"" + kind + "\"");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad algebra entry: ") + e.what());
    }
    for (const auto& a : out) validate(a);
    return out;
}

std::vector<StateAlgebra> load_algebras_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebras_json(ss.str());
}

}  // namespace freefactor
