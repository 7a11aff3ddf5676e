#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "coxcat/exact.hpp"

namespace coxcat {

using Face = std::vector<int>;  // sorted vertex ids

struct FaceHash {
  std::size_t operator()(const Face& f) const;
};

// Finite abstract simplicial complex, always containing the empty face.
class AbstractComplex {
 public:
  AbstractComplex();
  // Closes the given faces under taking subsets.
  static AbstractComplex from_facets(const std::vector<Face>& facets);
  // Takes the faces as given; throws std::invalid_argument if not subset-closed.
  static AbstractComplex from_faces(const std::vector<Face>& faces);

  // Dimension of the largest face (-1 for the empty complex).
  int dimension() const { return static_cast<int>(by_size_.size()) - 2; }
  const std::vector<Face>& faces_of_size(std::size_t k) const;
  std::size_t count_of_size(std::size_t k) const { return faces_of_size(k).size(); }
  std::size_t num_faces() const;
  std::optional<std::size_t> index(const Face& f) const;
  bool contains(const Face& f) const { return index(f).has_value(); }
  std::vector<int> vertices() const;

  // f_{-1}, f_0, ..., f_{dim}.
  std::vector<long long> f_vector() const;
  bool is_pure() const;
  std::vector<Face> facets() const;
  AbstractComplex link(const Face& f) const;
  // Full subcomplex on faces accepted by the predicate (must be subset-closed).
  template <class Pred>
  AbstractComplex filter(Pred keep) const {
    std::vector<Face> out;
    for (const auto& layer : by_size_)
      for (const auto& f : layer)
        if (keep(f)) out.push_back(f);
    return from_faces(out);
  }

 private:
  void insert(const Face& f);
  std::vector<std::vector<Face>> by_size_;
  std::vector<std::unordered_map<Face, std::size_t, FaceHash>> index_;
};

struct DegreeHomology {
  long long betti = 0;
  std::vector<BigInt> torsion;
  bool operator==(const DegreeHomology& o) const { return betti == o.betti && torsion == o.torsion; }
};

// Reduced homology over Z by degree, starting at -1.
struct HomologyProfile {
  std::map<int, DegreeHomology> degrees;

  long long betti(int d) const;
  bool torsion_free() const;
  // True iff all reduced homology is free and sits in degree d (rank arbitrary).
  bool concentrated_in(int d) const;
  long long euler() const;  // sum (-1)^i betti_i
  bool operator==(const HomologyProfile& o) const { return degrees == o.degrees; }
};

HomologyProfile homology(const AbstractComplex& c);
long long reduced_euler(const AbstractComplex& c);
// h_0..h_d for a pure complex of dimension d-1; throws NotPure otherwise.
std::vector<long long> h_vector(const AbstractComplex& c);
std::vector<long long> f_to_h(const std::vector<long long>& f);

// Join: faces are disjoint unions (vertex ids of b shifted past a's).
AbstractComplex join(const AbstractComplex& a, const AbstractComplex& b);

}  // namespace coxcat
