#ifndef EUCLID_EUCLID_HPP
#define EUCLID_EUCLID_HPP

#include <euclid/euclid_core.hpp>
#include <euclid/golden_ring.hpp>
#include <euclid/natural.hpp>
#include <euclid/potential_analysis.hpp>
#include <euclid/verification_harness.hpp>

#endif // EUCLID_EUCLID_HPP
