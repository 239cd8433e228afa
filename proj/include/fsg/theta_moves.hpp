#ifndef FSG_THETA_MOVES_HPP
#define FSG_THETA_MOVES_HPP

#include <array>
#include <string>
#include <vector>

#include "fsg/fs_core.hpp"
#include "fsg/graph.hpp"

namespace fsg {

// Token view of a theta frame under a configuration: which persons sit on the
// internal vertices of P, Q, R (indexed from the endp1 side) and at the
// endpoints.
struct ThetaTokens {
  ThetaFrame frame;
  int s_person = 0;
  std::vector<int> p_tokens;
  std::vector<int> q_tokens;
  std::vector<int> r_tokens;
  int endp1_token = -1;
  int endp2_token = -1;  // the paper's t when s sits at endp1

  static ThetaTokens from_config(const ThetaFrame& frame,
                                 const Configuration& c, int s_person);
};

struct RotationPlan {
  std::string case_id;                 // "i" .. "viii"
  std::array<int, 3> site;             // positions x, y, z; y has degree 2
  std::array<int, 3> target_cycle;     // persons a,b,c realized as a->b->c->a
  std::vector<Move> moves;
};

// Rotation case of a frame shape, "i".."viii"; throws on (1,2,2).
std::string rotation_case(const ThetaParams& params);
// The positions x, y, z carrying the realized 3-cycle; x-y and y-z are frame
// edges and y has degree 2 in the frame.
std::array<int, 3> rotation_site(const ThetaFrame& frame);
// Positions where s must sit before theta_rotate: endp1 for most cases, the
// internal vertex of R for case (ii), and either internal seat for (iii).
std::vector<int> rotation_seats(const ThetaFrame& frame);
// A frame cycle through all three site positions with spare room, used as the
// transport destination for the triple.
std::vector<int> rotation_site_cycle(const ThetaFrame& frame);

// Moves s along the path (or closed walk); every listed consecutive pair must
// be a Y-edge and the path must start at s's position.
MoveSequence move_s_along_path(const Graph& y, const Configuration& c,
                               const std::vector<int>& path, int s_person);

// s runs endp1 -> endp2 along path A and returns along B reversed. One full
// loop of the cycle A+B.
MoveSequence type_ab_move(const Graph& y, const ThetaTokens& tokens,
                          const Configuration& c, char a, char b);

// The table-of-cases 3-cycle: realizes a cyclic shift of the occupants of the
// rotation site, restoring every other person (s included). Requires s on a
// rotation seat.
RotationPlan theta_rotate(const Graph& y, const ThetaTokens& tokens,
                          const Configuration& c);

}  // namespace fsg

#endif  // FSG_THETA_MOVES_HPP
