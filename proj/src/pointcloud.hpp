#ifndef TDA_POINTCLOUD_HPP
#define TDA_POINTCLOUD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace tda {

// Row-major point cloud, all points sharing one ambient dimension.
struct PointCloud {
    std::size_t dim = 0;
    std::vector<double> coords; // size = n * dim

    std::size_t size() const { return dim == 0 ? 0 : coords.size() / dim; }
    const double* point(std::size_t i) const { return coords.data() + i * dim; }
};

enum class Shape { circle, annulus, bouquet, sphere, torus, composite };

struct GeneratorSpec {
    Shape shape = Shape::circle;
    std::size_t n = 100;
    std::size_t ambient_dim = 0; // 0 = natural dimension of the shape
    std::size_t loops = 3;       // bouquet only
    std::size_t sphere_dim = 2;  // intrinsic dimension of the sphere
    double noise_sigma = 0.0;
    uint64_t seed = 0;
};

Shape shape_from_name(const std::string& name);

// Natural (pre-embedding) ambient dimension of a shape.
std::size_t natural_dim(const GeneratorSpec& spec);

// Deterministic given the seed: the same spec always yields the same cloud.
// When ambient_dim exceeds the natural dimension, the cloud is pushed up by
// a seeded random orthonormal embedding (an isometry), then isotropic
// Gaussian noise of noise_sigma is added in the ambient space.
PointCloud generate(const GeneratorSpec& spec);

PointCloud read_cloud(const std::string& path);
void write_cloud(const PointCloud& cloud, const std::string& path);

std::string cloud_to_csv(const PointCloud& cloud);
PointCloud cloud_from_csv(const std::string& text);

} // namespace tda

#endif
