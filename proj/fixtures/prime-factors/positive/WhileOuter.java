import java.util.ArrayList;
import java.util.List;

public class WhileOuter {
    public List<Long> factorize(long number) {
        List<Long> result = new ArrayList<>();
        long divisor = 2;
        int steps = 0;
        while (divisor <= number) {
            steps++;
            while (number % divisor == 0) {
                result.add(divisor);
                number /= divisor;
            }
            divisor++;
        }
        return result;
    }
}
