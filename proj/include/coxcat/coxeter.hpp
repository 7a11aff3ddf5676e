#pragma once

#include <string>
#include <vector>

namespace coxcat {

using IntMatrix = std::vector<std::vector<int>>;

struct CoxeterDatum {
  int rank = 0;
  IntMatrix matrix;          // m_st, diagonal 1
  std::string type_label;
  std::vector<int> color;    // 0 = bullet, 1 = circle
  std::vector<bool> short_root;  // crystallographic root lengths; empty = default

  static CoxeterDatum parse(const std::string& label);
  // Default bipartition colors the smallest index of each component bullet.
  static CoxeterDatum from_matrix(const IntMatrix& m, std::string label = "");

  void validate() const;
  std::vector<std::vector<int>> components() const;
  bool irreducible() const { return rank > 0 && components().size() == 1; }
  bool crystallographic() const;
  std::vector<int> bullet() const;
  std::vector<int> circle() const;
};

CoxeterDatum product(const CoxeterDatum& a, const CoxeterDatum& b);

// Type label ("A3", "B2", "I2(7)", "A1xA2", ...) read off a Coxeter matrix.
std::string classify(const IntMatrix& m);

// Integer Cartan matrix a_ij = <alpha_i^vee, alpha_j>; crystallographic only.
IntMatrix integer_cartan(const CoxeterDatum& d);

}  // namespace coxcat
