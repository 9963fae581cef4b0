#include "pointcloud.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace tda {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Deterministic uniforms/normals built directly on mt19937_64 output so a
// seed pins the byte stream independent of the standard library's
// distribution implementations.
struct Rng {
    std::mt19937_64 eng;
    bool has_spare = false;
    double spare = 0.0;

    explicit Rng(uint64_t seed) : eng(seed) {}

    double uniform() { // in [0, 1)
        return static_cast<double>(eng() >> 11) * 0x1.0p-53;
    }

    double normal() { // Box-Muller
        if (has_spare) {
            has_spare = false;
            return spare;
        }
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare = r * std::sin(2.0 * kPi * u2);
        has_spare = true;
        return r * std::cos(2.0 * kPi * u2);
    }
};

void push_point(PointCloud& c, std::initializer_list<double> xs) {
    c.coords.insert(c.coords.end(), xs);
}

// Random orthonormal basis vectors u[0..count) in R^dim via Gram-Schmidt
// on Gaussian draws.
std::vector<std::vector<double>> random_frame(Rng& rng, std::size_t dim, std::size_t count) {
    std::vector<std::vector<double>> frame;
    while (frame.size() < count) {
        std::vector<double> v(dim);
        for (double& x : v) x = rng.normal();
        for (const auto& u : frame) {
            double dot = 0;
            for (std::size_t i = 0; i < dim; ++i) dot += v[i] * u[i];
            for (std::size_t i = 0; i < dim; ++i) v[i] -= dot * u[i];
        }
        double norm2 = 0;
        for (double x : v) norm2 += x * x;
        if (norm2 < 1e-12) continue; // degenerate draw, retry
        const double inv = 1.0 / std::sqrt(norm2);
        for (double& x : v) x *= inv;
        frame.push_back(std::move(v));
    }
    return frame;
}

PointCloud base_cloud(const GeneratorSpec& spec, Rng& rng) {
    PointCloud c;
    c.dim = natural_dim(spec);
    c.coords.reserve(spec.n * c.dim);
    switch (spec.shape) {
    case Shape::circle:
        for (std::size_t i = 0; i < spec.n; ++i) {
            const double t = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(spec.n);
            push_point(c, {std::cos(t), std::sin(t)});
        }
        break;
    case Shape::annulus:
        for (std::size_t i = 0; i < spec.n; ++i) {
            // Uniform over the ring between radii 1 and 2.
            const double r = std::sqrt(1.0 + 3.0 * rng.uniform());
            const double t = 2.0 * kPi * rng.uniform();
            push_point(c, {r * std::cos(t), r * std::sin(t)});
        }
        break;
    case Shape::bouquet: {
        const std::size_t k = spec.loops;
        for (std::size_t l = 0; l < k; ++l) {
            auto basis = random_frame(rng, 3, 2);
            const auto& u1 = basis[0];
            const auto& u2 = basis[1];
            std::size_t count = spec.n / k + (l < spec.n % k ? 1 : 0);
            for (std::size_t i = 0; i < count; ++i) {
                // Unit circle of center u1 in the (u1,u2) plane; passes
                // through the origin (the wedge point) at t = pi.
                const double t = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(count);
                const double a = 1.0 + std::cos(t), b = std::sin(t);
                push_point(c, {a * u1[0] + b * u2[0], a * u1[1] + b * u2[1], a * u1[2] + b * u2[2]});
            }
        }
        break;
    }
    case Shape::sphere:
        for (std::size_t i = 0; i < spec.n; ++i) {
            std::vector<double> v(spec.sphere_dim + 1);
            double norm2 = 0;
            do {
                norm2 = 0;
                for (double& x : v) {
                    x = rng.normal();
                    norm2 += x * x;
                }
            } while (norm2 < 1e-12);
            const double inv = 1.0 / std::sqrt(norm2);
            for (double x : v) c.coords.push_back(x * inv);
        }
        break;
    case Shape::torus:
        for (std::size_t i = 0; i < spec.n; ++i) {
            const double u = 2.0 * kPi * rng.uniform();
            const double v = 2.0 * kPi * rng.uniform();
            push_point(c, {(2.0 + std::cos(v)) * std::cos(u), (2.0 + std::cos(v)) * std::sin(u),
                           std::sin(v)});
        }
        break;
    case Shape::composite: {
        // One radius-3 loop plus four radius-1 loops tangent to it,
        // centers on the axes at distance 4. Points split by circumference.
        const std::size_t big = spec.n * 3 / 7;
        for (std::size_t i = 0; i < big; ++i) {
            const double t = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(big);
            push_point(c, {3.0 * std::cos(t), 3.0 * std::sin(t)});
        }
        std::size_t rest = spec.n - big;
        for (std::size_t l = 0; l < 4; ++l) {
            const double cx = (l == 0 ? 4.0 : l == 1 ? 0.0 : l == 2 ? -4.0 : 0.0);
            const double cy = (l == 0 ? 0.0 : l == 1 ? 4.0 : l == 2 ? 0.0 : -4.0);
            std::size_t count = rest / 4 + (l < rest % 4 ? 1 : 0);
            for (std::size_t i = 0; i < count; ++i) {
                const double t = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(count);
                push_point(c, {cx + std::cos(t), cy + std::sin(t)});
            }
        }
        break;
    }
    }
    return c;
}

} // namespace

Shape shape_from_name(const std::string& name) {
    if (name == "circle") return Shape::circle;
    if (name == "annulus") return Shape::annulus;
    if (name == "bouquet") return Shape::bouquet;
    if (name == "sphere") return Shape::sphere;
    if (name == "torus") return Shape::torus;
    if (name == "composite") return Shape::composite;
    throw invalid_input("unknown shape: " + name);
}

std::size_t natural_dim(const GeneratorSpec& spec) {
    switch (spec.shape) {
    case Shape::circle: return 2;
    case Shape::annulus: return 2;
    case Shape::bouquet: return 3;
    case Shape::sphere: return spec.sphere_dim + 1;
    case Shape::torus: return 3;
    case Shape::composite: return 2;
    }
    throw invalid_input("unknown shape");
}

PointCloud generate(const GeneratorSpec& spec) {
    if (spec.n < 1) throw invalid_input("point count must be >= 1");
    if (spec.shape == Shape::bouquet && spec.loops < 1)
        throw invalid_input("bouquet needs at least one loop");
    const std::size_t nat = natural_dim(spec);
    const std::size_t ambient = spec.ambient_dim == 0 ? nat : spec.ambient_dim;
    if (ambient < nat)
        throw invalid_input("ambient dimension below the shape's natural dimension");

    Rng rng(spec.seed);
    PointCloud base = base_cloud(spec, rng);

    PointCloud out;
    out.dim = ambient;
    const std::size_t n = base.size();
    out.coords.assign(n * ambient, 0.0);
    if (ambient == nat) {
        std::copy(base.coords.begin(), base.coords.end(), out.coords.begin());
    } else {
        auto frame = random_frame(rng, ambient, nat); // isometric embedding
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < nat; ++j) {
                const double x = base.point(i)[j];
                for (std::size_t a = 0; a < ambient; ++a)
                    out.coords[i * ambient + a] += x * frame[j][a];
            }
    }
    if (spec.noise_sigma > 0.0)
        for (double& x : out.coords) x += spec.noise_sigma * rng.normal();
    return out;
}

namespace {

void append_number(std::string& out, double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    out.append(buf, res.ptr);
}

bool parse_number(const std::string& field, double& out) {
    const char* b = field.c_str();
    const char* e = b + field.size();
    while (b < e && (*b == ' ' || *b == '\t')) ++b;
    while (e > b && (e[-1] == ' ' || e[-1] == '\t' || e[-1] == '\r')) --e;
    if (b == e) return false;
    auto res = std::from_chars(b, e, out);
    return res.ec == std::errc{} && res.ptr == e;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

} // namespace

std::string cloud_to_csv(const PointCloud& cloud) {
    std::string out;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        for (std::size_t j = 0; j < cloud.dim; ++j) {
            if (j) out.push_back(',');
            append_number(out, cloud.point(i)[j]);
        }
        out.push_back('\n');
    }
    return out;
}

PointCloud cloud_from_csv(const std::string& text) {
    PointCloud c;
    std::istringstream in(text);
    std::string line;
    std::size_t row = 0;
    bool first_data = true;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") {
            ++row;
            continue;
        }
        auto fields = split_csv_line(line);
        std::vector<double> vals(fields.size());
        bool ok = true;
        for (std::size_t j = 0; j < fields.size(); ++j)
            if (!parse_number(fields[j], vals[j])) {
                ok = false;
                break;
            }
        if (!ok) {
            if (row == 0) { // header row, skip
                ++row;
                continue;
            }
            throw parse_error("non-numeric field in point cloud CSV", row);
        }
        if (first_data) {
            c.dim = vals.size();
            first_data = false;
        } else if (vals.size() != c.dim) {
            throw parse_error("ragged row in point cloud CSV", row);
        }
        for (double v : vals) {
            if (!std::isfinite(v)) throw parse_error("non-finite coordinate", row);
            c.coords.push_back(v);
        }
        ++row;
    }
    return c;
}

PointCloud read_cloud(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_input("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return cloud_from_csv(ss.str());
}

void write_cloud(const PointCloud& cloud, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw invalid_input("cannot open " + path + " for writing");
    out << cloud_to_csv(cloud);
}

} // namespace tda
