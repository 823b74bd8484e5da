import java.util.HashMap;
import java.util.Map;

public class Memoized {
    private final Map<Integer, Long> cache = new HashMap<>();

    public long fib(int n) {
        if (n <= 1) {
            return n;
        }
        if (cache.containsKey(n)) {
            return cache.get(n);
        }
        long value = fib(n - 1) + fib(n - 2);
        cache.put(n, value);
        return value;
    }
}
