#include "serialize.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace tda {

std::string format_double(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string barcode_to_csv(const Barcode& bc) {
    std::string out = "dimension,birth,death\n";
    for (const auto& f : bc.features) {
        out += std::to_string(f.dimension);
        out.push_back(',');
        out += format_double(f.birth);
        out.push_back(',');
        out += format_double(f.death);
        out.push_back('\n');
    }
    return out;
}

Barcode barcode_from_csv(const std::string& text) {
    Barcode bc;
    std::istringstream in(text);
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || (row == 0 && line == "dimension,birth,death")) {
            ++row;
            continue;
        }
        std::istringstream ls(line);
        std::string dim_s, birth_s, death_s;
        if (!std::getline(ls, dim_s, ',') || !std::getline(ls, birth_s, ',') ||
            !std::getline(ls, death_s, ','))
            throw parse_error("barcode CSV needs dimension,birth,death", row);
        PersistenceFeature f;
        try {
            f.dimension = std::stoi(dim_s);
            f.birth = std::stod(birth_s);
            f.death = death_s == "inf" ? std::numeric_limits<double>::infinity() : std::stod(death_s);
        } catch (const std::exception&) {
            throw parse_error("bad numeric field in barcode CSV", row);
        }
        if (f.death < f.birth) throw parse_error("death before birth in barcode CSV", row);
        bc.max_dimension = std::max(bc.max_dimension, f.dimension);
        bc.features.push_back(f);
        ++row;
    }
    return bc;
}

Barcode read_barcode(const std::string& path) { return barcode_from_csv(read_file(path)); }

std::string barcode_to_json(const Barcode& bc) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& f : bc.features) {
        nlohmann::json item{{"dim", f.dimension}, {"birth", f.birth}};
        if (f.essential()) item["death"] = "inf";
        else item["death"] = f.death;
        arr.push_back(item);
    }
    return arr.dump(2) + "\n";
}

std::vector<std::vector<uint32_t>> maximal_simplices_from_text(const std::string& text) {
    std::vector<std::vector<uint32_t>> out;
    std::istringstream in(text);
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<uint32_t> verts;
        long long v;
        while (ls >> v) {
            if (v < 0) throw parse_error("negative vertex id", row);
            verts.push_back(static_cast<uint32_t>(v));
        }
        if (!ls.eof()) throw parse_error("non-numeric vertex id", row);
        if (!verts.empty()) out.push_back(std::move(verts));
        ++row;
    }
    return out;
}

std::vector<std::vector<uint32_t>> read_maximal_simplices(const std::string& path) {
    return maximal_simplices_from_text(read_file(path));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_input("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw invalid_input("cannot open " + path + " for writing");
    out << content;
}

} // namespace tda
