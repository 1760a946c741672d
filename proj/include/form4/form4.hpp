#pragma once

#include "form4/boundary.hpp"
#include "form4/calculus.hpp"
#include "form4/constitutive.hpp"
#include "form4/cylinder_tetrad.hpp"
#include "form4/frames.hpp"
#include "form4/identity_suite.hpp"
#include "form4/kvector.hpp"
#include "form4/metric.hpp"
#include "form4/operators.hpp"
#include "form4/quadrature.hpp"
#include "form4/random_inputs.hpp"
#include "form4/records.hpp"
#include "form4/rotating.hpp"
#include "form4/vec3.hpp"
#include "form4/wilson.hpp"
