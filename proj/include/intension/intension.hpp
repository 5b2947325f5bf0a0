#pragma once

#include "intension/algorithmic.hpp"
#include "intension/closed_forms.hpp"
#include "intension/compressor.hpp"
#include "intension/concept_model.hpp"
#include "intension/error.hpp"
#include "intension/io.hpp"
#include "intension/report.hpp"
#include "intension/serialize.hpp"
#include "intension/shannon.hpp"
