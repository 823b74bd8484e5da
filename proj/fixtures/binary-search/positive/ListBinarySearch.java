import java.util.List;

public class ListBinarySearch {
    public int search(List<String> items, String needle) {
        int lo = 0;
        int hi = items.size() - 1;
        while (lo <= hi) {
            int mid = (lo + hi) / 2;
            int cmp = items.get(mid).compareTo(needle);
            if (cmp == 0) {
                return mid;
            }
            if (cmp < 0) {
                lo = mid + 1;
            } else {
                hi = mid - 1;
            }
        }
        return -1;
    }
}
