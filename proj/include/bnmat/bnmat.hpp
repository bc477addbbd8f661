#pragma once

#include <bnmat/bench.hpp>
#include <bnmat/bit_matrix.hpp>
#include <bnmat/commands.hpp>
#include <bnmat/cost_model.hpp>
#include <bnmat/dense_matrix.hpp>
#include <bnmat/errors.hpp>
#include <bnmat/matrix_io.hpp>
#include <bnmat/op_counter.hpp>
#include <bnmat/random.hpp>
#include <bnmat/verify.hpp>
