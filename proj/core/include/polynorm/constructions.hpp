#pragma once

#include <string>
#include <vector>

#include "polynorm/chains.hpp"

namespace polynorm {

struct Construction {
    std::string name;  // "prism", "p3m", "product", "seven-halves"
    int n = 0;         // 2 for the prism
    int m = 0;
    PolytopePtr polytope;
    std::vector<Simplex> simplices;

    AffineChain chain() const { return triangulation_chain(polytope, simplices); }
};

// Prism over an m-gon: alternate corners cut from bottom and top, the leftover
// antiprism fanned on its bottom face and coned from (2,1). ceil(5(m-2)/2) tetrahedra.
Construction prism_triangulation(int m);

// P(3,m) with roles B = vertex 1, A = vertex 2, C = vertex 3 of the triangle.
// 9m/2 - 8 simplices for even m, (9m-15)/2 for odd m.
Construction p3m_triangulation(int m);

// Fan of the n-gon from vertex 1 (role B; other vertices alternate A, C), each
// triangle carrying the P(3,m) template. (n-2) * |p3m_triangulation(m)| simplices.
Construction product_triangulation(int n, int m);

// product_triangulation followed by bipyramid retriangulations across the fan
// chords. 7nm/2 - 6(n+m) + 8 simplices for even n, m >= 4.
Construction seven_halves_triangulation(int n, int m);

// The same simplices on P(m,n), with labels (i,j) -> (j,i).
Construction transpose(const Construction& c);

// Smallest available construction for P(n,m), trying both factor orders.
Construction best_construction(int n, int m);

long prism_size_formula(int m);
long p3m_size_formula(int m);
long seven_halves_size_formula(int n, int m);

// Simplex types on P(3,m) by how many vertices sit over each triangle vertex:
// three over one role gives a single-role type, two over each of two roles a pair type.
struct P3mCensus {
    int A = 0, B = 0, C = 0, AB = 0, AC = 0, BC = 0, other = 0;
};
P3mCensus p3m_census(const std::vector<Simplex>& simplices);

}  // namespace polynorm
