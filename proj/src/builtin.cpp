#include "barops/builtin.hpp"

#include <sstream>

namespace barops::builtin {

namespace {

const char* kTruncatedPolynomial = R"(basis one:0 x:2 xx:4
unit one
mul one one = one
mul one x = x
mul one xx = xx
mul x x = xx
mul x xx = 0
mul xx xx = 0
)";

const char* kExterior = R"(basis one:0 u:1
unit one
mul one one = one
mul one u = u
mul u u = 0
)";

const char* kSphere2 = R"(reduced
simplex pt dim 0
simplex c dim 2
faces s0 pt s0 pt s0 pt
)";

const char* kDisk2 = R"(reduced
simplex pt dim 0
simplex e dim 1
faces pt pt
simplex c dim 2
faces e s0 pt s0 pt
)";

const char* kInterval = R"(simplex a dim 0
simplex b dim 0
simplex e dim 1
faces b a
)";

const char* kSimplex2 = R"(simplex v0 dim 0
simplex v1 dim 0
simplex v2 dim 0
simplex e01 dim 1
faces v1 v0
simplex e02 dim 1
faces v2 v0
simplex e12 dim 1
faces v2 v1
simplex t dim 2
faces e12 e02 e01
)";

std::string projective_plane_text() {
    // every pair of the six vertices is an edge; ten triangles
    static const int faces[10][3] = {{1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 6}, {1, 5, 6},
                                     {2, 3, 5}, {2, 3, 6}, {2, 4, 6}, {3, 4, 5}, {4, 5, 6}};
    std::ostringstream os;
    for (int v = 1; v <= 6; ++v) os << "simplex v" << v << " dim 0\n";
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
            os << "simplex e" << i << j << " dim 1\n";
            os << "faces v" << j << " v" << i << "\n";
        }
    for (const auto& t : faces) {
        os << "simplex t" << t[0] << t[1] << t[2] << " dim 2\n";
        os << "faces e" << t[1] << t[2] << " e" << t[0] << t[2] << " e" << t[0] << t[1] << "\n";
    }
    return os.str();
}

} // namespace

std::shared_ptr<CommutativeAlgebra> truncated_polynomial() {
    return std::make_shared<CommutativeAlgebra>(parse_commutative_spec(kTruncatedPolynomial));
}

std::shared_ptr<CommutativeAlgebra> exterior() {
    return std::make_shared<CommutativeAlgebra>(parse_commutative_spec(kExterior));
}

std::shared_ptr<SimplicialSet> sphere2() { return parse_simplicial_set(kSphere2); }

std::shared_ptr<SimplicialSet> disk2() { return parse_simplicial_set(kDisk2); }

std::shared_ptr<SimplicialSet> interval() { return parse_simplicial_set(kInterval); }

std::shared_ptr<SimplicialSet> simplex2() { return parse_simplicial_set(kSimplex2); }

std::shared_ptr<SimplicialSet> projective_plane() {
    return parse_simplicial_set(projective_plane_text());
}

} // namespace barops::builtin
