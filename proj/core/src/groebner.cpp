#include "kisin3/groebner.hpp"

namespace kisin3::poly {

template class PolyIdeal<Rat>;
template class PolyIdeal<Fp>;

template MPoly<Rat> normal_form(MPoly<Rat>, const std::vector<MPoly<Rat>>&,
                                const MonomialOrder&);
template MPoly<Fp> normal_form(MPoly<Fp>, const std::vector<MPoly<Fp>>&,
                               const MonomialOrder&);
template std::vector<MPoly<Rat>> buchberger(std::vector<MPoly<Rat>>, const MonomialOrder&);
template std::vector<MPoly<Fp>> buchberger(std::vector<MPoly<Fp>>, const MonomialOrder&);

}  // namespace kisin3::poly
