import java.util.ArrayList;
import java.util.List;

public class DistinctFactors {
    public static List<Integer> distinctPrimeFactors(int value) {
        List<Integer> factors = new ArrayList<>();
        for (int candidate = 2; candidate <= value; candidate++) {
            if (value % candidate == 0) {
                factors.add(candidate);
                while (value % candidate == 0) {
                    value /= candidate;
                }
            }
        }
        return factors;
    }
}
