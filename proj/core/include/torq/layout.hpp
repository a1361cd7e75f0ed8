#ifndef TORQ_LAYOUT_HPP
#define TORQ_LAYOUT_HPP

#include <array>
#include <string>
#include <vector>

#include "torq/code.hpp"

namespace torq {

struct GridDims {
  int width = 0;   // cavity columns
  int height = 0;  // cavity rows
};

struct CavityCoord {
  int col = 0;
  int row = 0;
  bool operator==(const CavityCoord&) const = default;
};

// L1/L2 between two cavities with wraparound on both axes.
int toric_l1(const CavityCoord& p, const CavityCoord& q, const GridDims& dims);
double toric_l2(const CavityCoord& p, const CavityCoord& q, const GridDims& dims);
// Straight-line metrics ignoring the wrap, for planar-chip accounting.
int planar_l1(const CavityCoord& p, const CavityCoord& q);
double planar_l2(const CavityCoord& p, const CavityCoord& q);

// The four qubit kinds occupying the four corners of each 2x2 cell.
enum class QubitKind : int { L = 0, R = 1, X = 2, Z = 3 };

QubitKind qubit_kind(const BBCode& code, int qubit_id);
// Fixed corner convention: L=(0,0), X=(1,0), Z=(0,1), R=(1,1).
int corner_dx(QubitKind kind);
int corner_dy(QubitKind kind);

struct CellVec {
  int c = 0;  // cell column component
  int r = 0;  // cell row component
  bool operator==(const CellVec&) const = default;
};

// Interaction category (X/Z, L/R, i): the class of all n/2 CNOTs sharing
// one displacement under translation invariance.
struct Category {
  CheckType check = CheckType::X;
  DataFamily family = DataFamily::L;
  int term_index = 1;  // 1..3
};

std::array<Category, 12> all_categories();

// Placement of all 2n qubits on the cavity torus. Immutable once built.
struct TorusLayout {
  int cell_cols = 0;
  int cell_rows = 0;
  GridDims dims;                      // (2*cell_cols, 2*cell_rows)
  Monomial basis_g1;                  // cell-column generator, shared by all tori
  Monomial basis_g2;                  // cell-row generator
  std::array<CellVec, 4> offsets;     // per QubitKind, relative to the X torus
  std::vector<CavityCoord> placement; // by qubit id, size 2n
  std::vector<int> qubit_at;          // cavity (row*width+col) -> qubit id
  int max_cell_l1 = 0;                // the D the search settled on

  int cavity_index(const CavityCoord& c) const { return c.row * dims.width + c.col; }
};

// Check-to-data cavity displacement of one category, components reduced
// into [0, width) x [0, height).
CavityCoord category_displacement(const TorusLayout& layout, const BBCode& code, const Category& cat);

struct SearchPolicy {
  int max_d = -1;               // < 0: up to cell_cols + cell_rows
  // Require every X-category column displacement to be weakly shortest
  // leftward and every Z-category one rightward, so the router's fixed
  // per-color directions travel minimal legs.
  bool direction_aware = true;
};

// Minimizes the maximum per-category toric L1 (cell units) over all bases
// generating M and all relative cell offsets; deterministic lex tie-break.
TorusLayout search_layout(const BBCode& code, const SearchPolicy& policy = {});

bool verify_translation_invariance(const TorusLayout& layout, const BBCode& code);
bool placement_is_bijective(const TorusLayout& layout);

struct FixedCoupler {
  int check_qubit = 0;
  int data_qubit = 0;
  bool long_range = false;
};

// Baseline where each check keeps four lattice-adjacent partners and two
// long-range ones under periodic boundaries.
struct FixedCouplerLayout {
  TorusLayout placement;
  std::vector<FixedCoupler> couplers;  // 6 per check
};

FixedCouplerLayout fixed_coupler_layout(const BBCode& code);

std::string layout_to_json(const TorusLayout& layout, const BBCode& code);

}  // namespace torq

#endif
