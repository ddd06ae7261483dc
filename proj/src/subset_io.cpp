#include "charsum/subset_io.hpp"

#include <fstream>
#include <sstream>

namespace charsum {
namespace {

std::string modulus_csv(const FieldCtx& ctx) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ctx.modulus().size(); ++i) {
        if (i) os << ',';
        os << ctx.modulus()[i];
    }
    return os.str();
}

void check_header(const FieldCtx& ctx, std::uint64_t p, std::uint64_t r,
                  const std::vector<std::uint64_t>& modulus) {
    if (p != ctx.p() || r != ctx.r() || modulus != ctx.modulus())
        throw ValidationError("subset header does not match the field context");
}

}  // namespace

void write_subset_text(std::ostream& os, const FieldCtx& ctx, const Subset& s) {
    os << "# charsum subset v1\n";
    os << "# p=" << ctx.p() << " r=" << ctx.r() << " modulus=" << modulus_csv(ctx) << "\n";
    for (Elem v : s) os << v << "\n";
}

Subset read_subset_text(std::istream& is, const FieldCtx& ctx) {
    std::vector<Elem> values;
    std::string line;
    bool header_checked = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto p_pos = line.find("p=");
            if (p_pos == std::string::npos) continue;
            std::uint64_t p = 0, r = 0;
            std::vector<std::uint64_t> modulus;
            std::istringstream hs(line.substr(1));
            std::string token;
            while (hs >> token) {
                if (token.rfind("p=", 0) == 0) p = std::stoull(token.substr(2));
                else if (token.rfind("r=", 0) == 0) r = std::stoull(token.substr(2));
                else if (token.rfind("modulus=", 0) == 0) {
                    std::istringstream ms(token.substr(8));
                    std::string c;
                    while (std::getline(ms, c, ',')) modulus.push_back(std::stoull(c));
                }
            }
            check_header(ctx, p, r, modulus);
            header_checked = true;
            continue;
        }
        try {
            values.push_back(std::stoull(line));
        } catch (const std::exception&) {
            throw ValidationError("bad subset line: '" + line + "'");
        }
    }
    if (!header_checked) throw ValidationError("subset file is missing its field header");
    return Subset::of(ctx, std::move(values));
}

nlohmann::json subset_to_json(const FieldCtx& ctx, const Subset& s) {
    nlohmann::json j;
    j["p"] = ctx.p();
    j["r"] = ctx.r();
    j["modulus"] = ctx.modulus();
    j["elems"] = s.values();
    return j;
}

Subset subset_from_json(const FieldCtx& ctx, const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("elems"))
        throw ValidationError("subset JSON must be an object with an 'elems' array");
    if (j.contains("p")) {
        std::vector<std::uint64_t> modulus = j.value("modulus", std::vector<std::uint64_t>{});
        check_header(ctx, j.value("p", 0ULL), j.value("r", 0ULL), modulus);
    }
    std::vector<Elem> values;
    for (const auto& v : j.at("elems")) {
        if (!v.is_number_unsigned()) throw ValidationError("subset elements must be nonnegative integers");
        values.push_back(v.get<std::uint64_t>());
    }
    return Subset::of(ctx, std::move(values));
}

Subset load_subset(const FieldCtx& ctx, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open subset file '" + path + "'");
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        nlohmann::json j;
        in >> j;
        return subset_from_json(ctx, j);
    }
    return read_subset_text(in, ctx);
}

void save_subset(const FieldCtx& ctx, const Subset& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write subset file '" + path + "'");
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        out << subset_to_json(ctx, s).dump(2) << "\n";
        return;
    }
    write_subset_text(out, ctx, s);
}

nlohmann::json cyclo_to_json(const CycloSum& s) {
    nlohmann::json j;
    j["p"] = s.order();
    nlohmann::json coeffs = nlohmann::json::array();
    for (const BigInt& c : s.coeffs()) {
        if (c <= std::numeric_limits<std::uint64_t>::max()) {
            coeffs.push_back(c.convert_to<std::uint64_t>());
        } else {
            coeffs.push_back(c.str());  // decimal string once past 64 bits
        }
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

}  // namespace charsum
