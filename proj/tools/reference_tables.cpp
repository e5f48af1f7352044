#include "reference_tables.hpp"

namespace resum::ref {

const std::vector<SaddleRow>& saddle_table()
{
    static const std::vector<SaddleRow> t = {
        {"3/2", "4.031233504", "0.2429640300"},
        {"2", "4.466846120", "0.2136524524"},
        {"5/2", "4.895690188", "0.1896450439"},
        {"3", "5.3168634291", "0.1699396648"},
        {"4", "6.1359656420", "0.14003129119"},
    };
    return t;
}

const std::vector<OdmRow>& d0_strong_table()
{
    static const std::vector<OdmRow> t = {
        {5, "1.131726", "5.7e-3", "-5.1578"},    {10, "2.35036", "2.5e-5", "-10.5921"},
        {15, "3.34050", "3.7e-6", "-12.5008"},   {20, "4.5594", "2.2e-8", "-17.5923"},
        {25, "5.5495", "3.4e-9", "-19.4855"},    {30, "6.8614", "5.1e-11", "-23.6818"},
        {35, "7.7586", "3.5e-12", "-26.3535"},   {40, "8.9778", "2.5e-14", "-31.2859"},
        {45, "9.9678", "3.9e-15", "-33.1625"},   {50, "11.1869", "2.9e-17", "-38.0643"},
        {55, "12.1769", "4.5e-18", "-39.9364"},  {60, "13.3958", "3.4e-20", "-44.8208"},
    };
    return t;
}

const std::vector<OdmRow>& d0_g5_table()
{
    static const std::vector<OdmRow> t = {
        {5, "0.5918", "1.1e-3", "-6.7454"},     {10, "1.0297", "3.7e-5", "-10.2069"},
        {15, "1.5627", "1.7e-6", "-13.2837"},   {20, "2.0779", "9.2e-7", "-13.8898"},
        {25, "2.5865", "1.1e-7", "-16.0103"},   {30, "3.1376", "3.5e-9", "-19.4614"},
        {35, "3.6167", "3.4e-9", "-19.4706"},   {40, "4.1877", "8.0e-10", "-20.9453"},
        {45, "4.6557", "1.0e-10", "-22.9796"},  {50, "5.3021", "2.9e-11", "-24.2450"},
        {55, "5.6959", "1.2e-11", "-25.0907"},  {60, "6.2458", "2.4e-12", "-26.7433"},
    };
    return t;
}

const std::vector<FixedPointRow>& phi4_fixed_point_table()
{
    static const std::vector<FixedPointRow> t = {
        {3, "1.09871", "1"},
        {4, "1.39330", "0.7984"},
        {5, "1.41771", "0.7804"},
        {6, "1.41737", "0.7806"},
        {7, "1.41744", "0.7807"},
    };
    return t;
}

const std::vector<ExponentRow>& phi4_exponents_table()
{
    static const std::vector<ExponentRow> t = {
        {3, "1.23717", "0.62521", nullptr},
        {4, "1.23486", "0.62486", "0.0290"},
        {5, "1.23845", "0.62746", "0.0289"},
        {6, "1.23820", "0.62771", "0.0297"},
        {7, "1.23923", "0.62865", "0.0306"},
    };
    return t;
}

const std::vector<BorelRow>& borel_map_table()
{
    static const std::vector<BorelRow> t = {
        {2, "1.8774", "0.6338", "1.2257"},
        {3, "1.5135", "0.6328", "1.2370"},
        {4, "1.4149", "0.62966", "1.2386"},
        {5, "1.4107", "0.6302", "1.2398"},
        {6, "1.4103", "0.6302", "1.2398"},
        {7, "1.4105", "0.6302", "1.2398"},
    };
    return t;
}

}  // namespace resum::ref
