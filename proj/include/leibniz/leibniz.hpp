#pragma once

#include "leibniz/algebra.hpp"
#include "leibniz/corpus.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/exactlin.hpp"
#include "leibniz/format.hpp"
#include "leibniz/oracle.hpp"
#include "leibniz/radicals.hpp"
#include "leibniz/report.hpp"
