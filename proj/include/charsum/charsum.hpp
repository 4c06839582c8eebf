#pragma once

// Everything: residues and characters, character sums, pretentious distances
// and the experiment harness.

#include "charsum/residue/arithmetic.hpp"
#include "charsum/residue/constants.hpp"
#include "charsum/residue/modulus.hpp"
#include "charsum/residue/primes.hpp"
#include "charsum/residue/summation.hpp"
#include "charsum/residue/unit_value.hpp"

#include "charsum/characters/character.hpp"
#include "charsum/characters/serialize.hpp"
#include "charsum/characters/value_table.hpp"

#include "charsum/charsums/arcs.hpp"
#include "charsum/charsums/bateman_chowla.hpp"
#include "charsum/charsums/direction.hpp"
#include "charsum/charsums/gauss.hpp"
#include "charsum/charsums/harmonic.hpp"
#include "charsum/charsums/kloosterman.hpp"
#include "charsum/charsums/polya.hpp"
#include "charsum/charsums/profile.hpp"

#include "charsum/pretentious/distance.hpp"
#include "charsum/pretentious/inequalities.hpp"
#include "charsum/pretentious/lfunction.hpp"
#include "charsum/pretentious/multiplicative.hpp"
#include "charsum/pretentious/nearest.hpp"
#include "charsum/pretentious/sequence.hpp"
#include "charsum/pretentious/trig.hpp"

#include "charsum/experiments/arc_compare.hpp"
#include "charsum/experiments/config.hpp"
#include "charsum/experiments/direction.hpp"
#include "charsum/experiments/emit.hpp"
#include "charsum/experiments/identity_suite.hpp"
#include "charsum/experiments/odd_order.hpp"
#include "charsum/experiments/parallel.hpp"
#include "charsum/experiments/product.hpp"
#include "charsum/experiments/regression.hpp"
#include "charsum/experiments/scan.hpp"
